//! A small grammar for classes in `K_0(P^n)`: integer combinations of powers
//! of `h = [O(1)]`.
//!
//! ```text
//! expr := ['-'] term (('+' | '-') term)*
//! term := int | [int ['*']] 'h' ['^' ['-'] int]
//! ```
//!
//! Whitespace may separate tokens but not split a number. Examples: `3`,
//! `h^2 - 2h + 1`, `2*h^-1 - h^3`.

use std::collections::BTreeMap;

/// Parses an expression into a map from exponent to coefficient.
pub fn parse_class(input: &str) -> Result<BTreeMap<i64, i64>, String> {
    let chars: Vec<char> = input.chars().collect();
    if chars.iter().all(|c| c.is_whitespace()) {
        return Err("empty expression".into());
    }
    let mut pos = 0;
    let mut out: BTreeMap<i64, i64> = BTreeMap::new();
    let mut first = true;
    loop {
        skip_ws(&chars, &mut pos);
        if pos == chars.len() {
            break;
        }
        let sign = match chars[pos] {
            '+' if !first => {
                pos += 1;
                1
            }
            '-' => {
                pos += 1;
                -1
            }
            _ if first => 1,
            c => return Err(format!("expected + or - at position {pos}, found {c}")),
        };
        first = false;
        skip_ws(&chars, &mut pos);
        let coeff = number(&chars, &mut pos)?;
        skip_ws(&chars, &mut pos);
        let has_star = pos < chars.len() && chars[pos] == '*';
        if has_star {
            if coeff.is_none() {
                return Err(format!("'*' without a coefficient at position {pos}"));
            }
            pos += 1;
            skip_ws(&chars, &mut pos);
        }
        let exponent = if pos < chars.len() && chars[pos] == 'h' {
            pos += 1;
            skip_ws(&chars, &mut pos);
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                skip_ws(&chars, &mut pos);
                let neg = pos < chars.len() && chars[pos] == '-';
                if neg {
                    pos += 1;
                    skip_ws(&chars, &mut pos);
                }
                let e = number(&chars, &mut pos)?.ok_or_else(|| format!("missing exponent at position {pos}"))?;
                if neg {
                    -e
                } else {
                    e
                }
            } else {
                1
            }
        } else if has_star {
            return Err(format!("expected h after '*' at position {pos}"));
        } else if coeff.is_none() {
            return Err(match chars.get(pos) {
                Some(c) => format!("unexpected {c} at position {pos}"),
                None => "expression ends after a sign".into(),
            });
        } else {
            0
        };
        let c = sign * coeff.unwrap_or(1);
        let entry = out.entry(exponent).or_insert(0);
        *entry = entry.checked_add(c).ok_or("coefficient overflow")?;
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while *pos < chars.len() && chars[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn number(chars: &[char], pos: &mut usize) -> Result<Option<i64>, String> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Ok(None);
    }
    let s: String = chars[start..*pos].iter().collect();
    s.parse().map(Some).map_err(|_| format!("number {s} is too large"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(s: &str) -> Vec<(i64, i64)> {
        parse_class(s).unwrap().into_iter().collect()
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(parsed("3"), vec![(0, 3)]);
        assert_eq!(parsed("h"), vec![(1, 1)]);
        assert_eq!(parsed("-h^-1"), vec![(-1, -1)]);
        assert_eq!(parsed("h^2 - 2h + 1"), vec![(0, 1), (1, -2), (2, 1)]);
        assert_eq!(parsed("2*h^-1 - h^3 + h^-1"), vec![(-1, 3), (3, -1)]);
        assert_eq!(parsed("h - h"), vec![]);
        assert_eq!(parsed(" 2 * h ^ 3 "), vec![(3, 2)]);
    }

    #[test]
    fn rejected_forms() {
        for s in ["", "x", "2*", "h^", "3 3", "+", "h^-", "2**h", "-", "1 2h", "   "] {
            assert!(parse_class(s).is_err(), "{s:?}");
        }
    }
}
