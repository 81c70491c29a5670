//! Reading and writing of profile files.
//!
//! The format is UTF-8 and line oriented:
//!
//! * lines starting with `#` are comments, blank lines are ignored;
//! * the first data line is `<m> <k>`;
//! * an optional line `names: <label0> ... <label{m-1}>` assigns labels;
//! * every other line is one ballot: whitespace-separated candidate
//!   indices, optionally prefixed by `<count> *` to repeat the ballot.
//!   A line consisting only of `<count> *` denotes empty ballots.
//!
//! Committees render as `{i1,i2,...}` with members ascending; labels are
//! substituted when names are given.

use crate::model::{Committee, ElectionInstance};
use crate::Error;

/// Parses a profile file, expanding multiplicity lines into individual
/// voters in file order.
pub fn parse_profile(text: &str) -> Result<ElectionInstance, Error> {
    let mut header: Option<(usize, usize)> = None;
    let mut names: Option<Vec<String>> = None;
    let mut ballots: Vec<Vec<usize>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse {
            line: line_no,
            msg,
        };

        if header.is_none() {
            let mut it = line.split_whitespace();
            let m = parse_count(it.next(), "candidate count").map_err(&err)?;
            let k = parse_count(it.next(), "committee size").map_err(&err)?;
            if it.next().is_some() {
                return Err(err("expected exactly `<m> <k>` on the header line".into()));
            }
            if m == 0 {
                return Err(err("candidate count must be positive".into()));
            }
            if k == 0 || k > m {
                return Err(err(format!("committee size {k} out of range 1..={m}")));
            }
            header = Some((m, k));
            continue;
        }
        let (m, _) = header.unwrap();

        if let Some(rest) = line.strip_prefix("names:") {
            if names.is_some() || !ballots.is_empty() {
                return Err(err(
                    "names line must appear once, before any ballot".into()
                ));
            }
            let labels: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
            if labels.len() != m {
                return Err(err(format!(
                    "expected {m} labels, found {}",
                    labels.len()
                )));
            }
            names = Some(labels);
            continue;
        }

        let tokens: Vec<&str> = line.split_whitespace().collect();
        let (count, index_tokens) = if tokens.len() >= 2 && tokens[1] == "*" {
            let c = parse_count(Some(tokens[0]), "ballot multiplicity").map_err(&err)?;
            if c == 0 {
                return Err(err("ballot multiplicity must be positive".into()));
            }
            (c, &tokens[2..])
        } else {
            (1, &tokens[..])
        };

        let mut ballot = Vec::with_capacity(index_tokens.len());
        for tok in index_tokens {
            let c: usize = tok
                .parse()
                .map_err(|_| err(format!("`{tok}` is not a candidate index")))?;
            if c >= m {
                return Err(err(format!(
                    "candidate index {c} out of range (m = {m})"
                )));
            }
            if ballot.contains(&c) {
                return Err(err(format!("candidate {c} listed twice in one ballot")));
            }
            ballot.push(c);
        }
        for _ in 0..count {
            ballots.push(ballot.clone());
        }
    }

    let (m, k) = header.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing `<m> <k>` header line".into(),
    })?;
    ElectionInstance::new(m, k, ballots, names)
}

fn parse_count(token: Option<&str>, what: &str) -> Result<usize, String> {
    let tok = token.ok_or_else(|| format!("missing {what}"))?;
    tok.parse()
        .map_err(|_| format!("`{tok}` is not a valid {what}"))
}

/// Renders an instance in the profile format; one line per voter, so that
/// parsing the output reproduces the instance exactly.
pub fn serialize_profile(inst: &ElectionInstance) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{} {}\n",
        inst.num_candidates(),
        inst.committee_size()
    ));
    if let Some(labels) = inst.names() {
        out.push_str("names:");
        for label in labels {
            out.push(' ');
            out.push_str(label);
        }
        out.push('\n');
    }
    for v in 0..inst.num_voters() {
        let ballot = inst.ballot(v);
        if ballot.is_empty() {
            out.push_str("1 *\n");
        } else {
            let line: Vec<String> = ballot.iter().map(|c| c.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Renders a committee as `{...}`, substituting labels when present.
pub fn format_committee(inst: &ElectionInstance, committee: &Committee) -> String {
    let labels: Vec<String> = committee
        .iter()
        .map(|c| inst.candidate_label(c))
        .collect();
    format!("{{{}}}", labels.join(","))
}

/// Parses `{a,b,c}` (labels or indices, braces optional) into a committee.
pub fn parse_committee(inst: &ElectionInstance, text: &str) -> Result<Committee, Error> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut members = Vec::new();
    for part in inner.split(',') {
        let token = part.trim();
        if token.is_empty() {
            continue;
        }
        let candidate = match inst.names() {
            Some(labels) => labels.iter().position(|l| l == token),
            None => None,
        };
        let candidate = match candidate {
            Some(c) => c,
            None => token
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("unknown candidate `{token}`")))?,
        };
        if candidate >= inst.num_candidates() {
            return Err(Error::Invalid(format!(
                "candidate index {candidate} out of range"
            )));
        }
        members.push(candidate);
    }
    if members.is_empty() {
        return Err(Error::Invalid("empty committee".into()));
    }
    Ok(Committee::new(members))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_instance() {
        let inst = parse_profile("1 1\n0\n").unwrap();
        assert_eq!(inst.num_voters(), 1);
        assert_eq!(inst.num_candidates(), 1);
        assert_eq!(inst.committee_size(), 1);
    }

    #[test]
    fn multiplicity_expansion() {
        let inst = parse_profile("3 2\n2 * 0 1\n").unwrap();
        assert_eq!(inst.num_voters(), 2);
        assert_eq!(inst.ballot(0), &[0, 1]);
        assert_eq!(inst.ballot(1), &[0, 1]);
    }

    #[test]
    fn comments_names_and_empty_ballots() {
        let text = "# steering committee\n\n4 2\nnames: a b c d\n0 1\n2 * 3\n1 *\n";
        let inst = parse_profile(text).unwrap();
        assert_eq!(inst.num_voters(), 4);
        assert_eq!(inst.empty_ballots(), vec![3]);
        assert_eq!(inst.candidate_label(3), "d");
    }

    #[test]
    fn error_positions() {
        match parse_profile("2 1\n0 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_profile("2 3\n0\n").is_err());
        assert!(parse_profile("2 1\n0 0\n").is_err());
        assert!(parse_profile("").is_err());
    }

    #[test]
    fn committee_rendering() {
        let inst = parse_profile("4 2\nnames: a b c d\n0 1\n").unwrap();
        let w = Committee::new(vec![2, 0]);
        assert_eq!(format_committee(&inst, &w), "{a,c}");
        assert_eq!(parse_committee(&inst, "{a,c}").unwrap(), w);
        assert_eq!(parse_committee(&inst, "2,0").unwrap(), w);
        assert!(parse_committee(&inst, "{z}").is_err());
    }
}
