//! Parsing of statistic specifications from the command line.
//!
//! Accepted forms: `p2` / `p_2` (hook power sum), `e1` / `e_1`
//! (elementary), `q3` / `q_3` (shifted product), and `mu=2,1` or
//! `mu=(2,1)` (power-sum vector over a partition).

use hookstats::{HookStatistic, Partition};

pub fn parse_statistic(input: &str) -> Result<HookStatistic, String> {
    let s = input.trim();
    if let Some(rest) = s.strip_prefix("mu=") {
        return parse_mu(rest);
    }
    let mut chars = s.chars();
    let family = chars
        .next()
        .ok_or_else(|| "empty statistic specification".to_string())?;
    if !matches!(family, 'p' | 'e' | 'q') {
        return Err(format!(
            "unknown statistic family {:?}; expected p, e, q, or mu=",
            family
        ));
    }
    let index_text = chars.as_str().trim_start_matches('_');
    let index: usize = index_text
        .parse()
        .map_err(|_| format!("bad index {:?} in statistic {:?}", index_text, s))?;
    Ok(match family {
        'p' => HookStatistic::PowerSum(index),
        'e' => HookStatistic::Elementary(index),
        'q' => HookStatistic::QProduct(index),
        _ => unreachable!(),
    })
}

fn parse_mu(text: &str) -> Result<HookStatistic, String> {
    let cleaned = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if cleaned.is_empty() {
        return Err("mu needs at least one part".to_string());
    }
    let mut parts = Vec::new();
    for piece in cleaned.split(',') {
        let part: usize = piece
            .trim()
            .parse()
            .map_err(|_| format!("bad part {:?} in mu", piece))?;
        if part == 0 {
            return Err("mu parts must be positive".to_string());
        }
        parts.push(part);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err("mu parts must be weakly decreasing".to_string());
    }
    Ok(HookStatistic::PowerSumVector(Partition::new(parts)))
}

/// What the detected degree of the average should be compared against.
pub enum ExpectedDegree {
    Exactly(usize),
    AtMost(usize),
    Unspecified,
}

impl ExpectedDegree {
    pub fn describe(&self) -> String {
        match self {
            ExpectedDegree::Exactly(d) => d.to_string(),
            ExpectedDegree::AtMost(b) => format!("<={}", b),
            ExpectedDegree::Unspecified => "-".to_string(),
        }
    }
}

/// The documented degree of the average as a polynomial in `n`: `k + 1`
/// for hook power sums and shifted products, the bound `j + k` (parts plus
/// weight) for power-sum vectors, and no claim for elementary statistics.
pub fn expected_degree(statistic: &HookStatistic) -> ExpectedDegree {
    match statistic {
        HookStatistic::PowerSum(k) => ExpectedDegree::Exactly(k + 1),
        HookStatistic::QProduct(r) => ExpectedDegree::Exactly(r + 1),
        HookStatistic::Elementary(_) => ExpectedDegree::Unspecified,
        HookStatistic::PowerSumVector(mu) => ExpectedDegree::AtMost(mu.num_parts() + mu.n()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_scalar_families() {
        assert_eq!(parse_statistic("p2"), Ok(HookStatistic::PowerSum(2)));
        assert_eq!(parse_statistic("p_2"), Ok(HookStatistic::PowerSum(2)));
        assert_eq!(parse_statistic("e0"), Ok(HookStatistic::Elementary(0)));
        assert_eq!(parse_statistic(" q10 "), Ok(HookStatistic::QProduct(10)));
    }

    #[test]
    fn parses_vector_specs() {
        let expect = HookStatistic::PowerSumVector(Partition::new(vec![2, 1]));
        assert_eq!(parse_statistic("mu=2,1"), Ok(expect.clone()));
        assert_eq!(parse_statistic("mu=(2,1)"), Ok(expect.clone()));
        assert_eq!(parse_statistic("mu=( 2 , 1 )"), Ok(expect));
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(parse_statistic("").is_err());
        assert!(parse_statistic("x3").is_err());
        assert!(parse_statistic("p").is_err());
        assert!(parse_statistic("pq2").is_err());
        assert!(parse_statistic("mu=").is_err());
        assert!(parse_statistic("mu=0").is_err());
        assert!(parse_statistic("mu=1,2").is_err());
        assert!(parse_statistic("mu=2,x").is_err());
    }

    #[test]
    fn expected_degrees() {
        assert_eq!(expected_degree(&HookStatistic::PowerSum(2)).describe(), "3");
        assert_eq!(expected_degree(&HookStatistic::QProduct(0)).describe(), "1");
        assert_eq!(
            expected_degree(&HookStatistic::Elementary(4)).describe(),
            "-"
        );
        assert_eq!(
            expected_degree(&HookStatistic::PowerSumVector(Partition::new(vec![2, 1])))
                .describe(),
            "<=5"
        );
    }
}
