//! OEIS b-file reading.

use std::str::FromStr;

use num_bigint::BigInt;

/// `(n, a(n))` pairs with strictly increasing `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
}

impl FromStr for BFile {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(format!("line {}: expected \"n a(n)\"", lineno + 1));
            };
            let n: i64 = n
                .parse()
                .map_err(|_| format!("line {}: bad index `{n}`", lineno + 1))?;
            let v: BigInt = v
                .parse()
                .map_err(|_| format!("line {}: bad value `{v}`", lineno + 1))?;
            if entries.last().is_some_and(|&(prev, _)| prev >= n) {
                return Err(format!("line {}: index {n} is not increasing", lineno + 1));
            }
            entries.push((n, v));
        }
        Ok(BFile { entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let b: BFile = "# A000669\n\n1 1\n2 1\n3 2\n".parse().unwrap();
        assert_eq!(b.entries.len(), 3);
        assert_eq!(b.entries[2], (3, BigInt::from(2)));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!("1 1\n1 2\n".parse::<BFile>().is_err());
        assert!("1\n".parse::<BFile>().is_err());
        assert!("1 x\n".parse::<BFile>().is_err());
        assert!("1 2 3\n".parse::<BFile>().is_err());
    }

    #[test]
    fn big_values() {
        let b: BFile = "8 167347010944000000000000\n".parse().unwrap();
        assert_eq!(b.entries[0].1.to_string(), "167347010944000000000000");
    }
}
