//! Command-line weight syntax: comma-separated integers, `;` between GL and Sp parts.

use crate::error::{CliError, Result};

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Input(format!("not an integer: {x:?}")))
        })
        .collect()
}

/// `"3,2;1,0"` → `([3,2], [1,0])`; without `;` the Sp part is empty.
pub fn parse_weight(s: &str) -> Result<(Vec<i64>, Vec<i64>)> {
    match s.split_once(';') {
        Some((gl, sp)) => Ok((parse_ints(gl)?, parse_ints(sp)?)),
        None => Ok((parse_ints(s)?, Vec::new())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!(parse_weight("3,2;1,0").unwrap(), (vec![3, 2], vec![1, 0]));
        assert_eq!(parse_weight("-1").unwrap(), (vec![-1], vec![]));
        assert_eq!(parse_weight(";1").unwrap(), (vec![], vec![1]));
        assert!(parse_weight("1,x").is_err());
    }
}
