"""Smoke test for the pycolombeau extension.

Build with `cargo build -p colombeau-py`, then copy or link
target/debug/libpycolombeau.so to pycolombeau.so on PYTHONPATH.
"""

import json

import pycolombeau as pc

evens = pc.IndexSet("chi{m=2;T=[0];N=0}")
assert 4 in evens and 3 not in evens
assert str(evens.complement()) == "chi{m=2;T=[1];N=0}"

a1 = pc.GenNumber.alpha("1")
assert str(a1 + a1) == "2*eps^(1)"
assert a1.valuation() == ("1", True)
assert pc.GenNumber.alpha("2").norm_display() == "0.135335"

chi = pc.GenNumber.chi(evens)
kind, witness = chi.classify()
assert kind == "zero_divisor"
assert str(witness) == "chi{m=2;T=[1];N=0}"
assert (chi * witness).is_zero()

kind, inverse = a1.classify()
assert kind == "unit" and str(inverse) == "eps^(-1)"
try:
    pc.GenNumber("1") / chi
except ZeroDivisionError:
    pass
else:
    raise AssertionError("division by a zero divisor succeeded")

x = pc.GenNumber("piece[chi{m=2;T=[0];N=0}: 2*eps^(1/2); chi{m=2;T=[1];N=0}: 1]")
assert pc.GenNumber.from_json(x.to_json()) == x
assert json.loads(x.to_json())["pieces"][0]["series"]["terms"] == [["1/2", "2"]]

q = pc.GenQuaternion("quat(1;1;0;0)")
assert str(q * q.conj()) == "quat(2; 0; 0; 0)"
assert str(q.norm_sq()) == "2"
kind, qinv = q.classify()
assert kind == "unit" and str(q * qinv) == "quat(1; 0; 0; 0)"
e = pc.GenQuaternion.from_parts(chi, pc.GenNumber("0"), pc.GenNumber("0"), pc.GenNumber("0"))
assert e.is_idempotent() and e.idempotent_decompose() == evens
assert isinstance(pc.evaluate("i*j"), pc.GenQuaternion)
assert str(pc.evaluate("i*j")) == "quat(0; 0; 0; 1)"

report = pc.ideal_report([a1 * chi, witness])
assert report["dense_algebraic"] and report["whole_ring"]
report = pc.ideal_report([chi])
assert not report["dense_algebraic"] and report["annihilator"] == witness

assert pc.identity_check([pc.GenNumber("0"), chi], pc.GenNumber("0")) == witness
assert pc.identity_check([pc.GenNumber("0"), pc.GenNumber("1")], pc.GenNumber("0")) is None

b = pc.ann_constant(2, [([1, 1], chi), ([0, 2], chi)])
assert b == witness

print("pycolombeau smoke test passed")
