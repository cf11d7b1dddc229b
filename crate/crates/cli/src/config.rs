//! `key = value` configuration read from an explicit path.

use std::path::Path;

use colombeau::scalar::parse_rational;
use num_rational::BigRational;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Config {
    pub default_window: Option<BigRational>,
    pub verify_n_list: Option<Vec<BigRational>>,
}

pub fn parse_window(text: &str) -> Result<BigRational, String> {
    let w = parse_rational(text).map_err(|e| e.to_string())?;
    if w <= BigRational::from_integer(0.into()) {
        return Err(format!("window must be positive, got {text}"));
    }
    Ok(w)
}

pub fn parse_list(text: &str) -> Result<Vec<BigRational>, String> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_rational(s).map_err(|e| e.to_string()))
        .collect()
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, String> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
            let value = value.trim();
            match key.trim() {
                "default_window" => cfg.default_window = Some(parse_window(value)?),
                "verify_n_list" => cfg.verify_n_list = Some(parse_list(value)?),
                other => return Err(format!("line {}: unknown key `{other}`", lineno + 1)),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Config::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use colombeau::scalar::int;

    #[test]
    fn parses_known_keys() {
        let cfg = Config::parse("# comment\ndefault_window = 8\nverify_n_list=1, 2,5\n").unwrap();
        assert_eq!(cfg.default_window, Some(int(8)));
        assert_eq!(cfg.verify_n_list, Some(vec![int(1), int(2), int(5)]));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_windows() {
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("default_window = -1").is_err());
        assert!(Config::parse("default_window").is_err());
    }
}
