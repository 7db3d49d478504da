use super::{Clause, CnfFormula, Literal};
use crate::{Error, Result};

/// Parse DIMACS CNF.
///
/// Clause count mismatches against the header, tautological clauses (which
/// are dropped) and an unterminated final clause are recorded as warnings in
/// [`CnfFormula::meta`]. An empty clause marks the formula UNSAT.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut comments = Vec::new();
    let mut warnings = Vec::new();
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut empty_clause = false;
    let mut seen = 0usize;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('c') {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                comments.push(rest.trim().to_string());
                continue;
            }
        }
        if line.starts_with('%') {
            // SATLIB end marker
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(lineno, "duplicate problem line"));
            }
            header = Some(parse_header(line, lineno)?);
            continue;
        }
        let (n, _) = header.ok_or_else(|| Error::parse(lineno, "clause before `p cnf` header"))?;
        for tok in line.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad literal {tok:?}")))?;
            if lit == 0 {
                if tok.starts_with('-') {
                    return Err(Error::parse(lineno, "literal index 0"));
                }
                seen += 1;
                if current.is_empty() {
                    empty_clause = true;
                    warnings.push(format!("line {lineno}: empty clause, formula is UNSAT"));
                } else {
                    push_clause(
                        &mut clauses,
                        &mut warnings,
                        std::mem::take(&mut current),
                        lineno,
                    );
                }
                continue;
            }
            let l = Literal::from_dimacs(lit).expect("nonzero");
            if l.var >= n {
                return Err(Error::parse(
                    lineno,
                    format!("variable {} exceeds declared n = {n}", l.var + 1),
                ));
            }
            current.push(l);
        }
    }

    let (n, m) = header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p cnf` header"))?;
    if !current.is_empty() {
        warnings.push("final clause not terminated by 0".to_string());
        seen += 1;
        push_clause(&mut clauses, &mut warnings, current, last_line);
    }
    if seen != m {
        warnings.push(format!("header declares {m} clauses, found {seen}"));
    }

    let mut f = CnfFormula::new(n, clauses)?;
    if empty_clause {
        f.set_empty_clause();
    }
    f.meta.declared_clauses = m;
    f.meta.comments = comments;
    f.meta.warnings = warnings;
    Ok(f)
}

fn parse_header(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "p" || toks[1] != "cnf" {
        return Err(Error::parse(lineno, "expected `p cnf <vars> <clauses>`"));
    }
    let n: usize = toks[2]
        .parse()
        .map_err(|_| Error::parse(lineno, format!("bad variable count {:?}", toks[2])))?;
    let m: usize = toks[3]
        .parse()
        .map_err(|_| Error::parse(lineno, format!("bad clause count {:?}", toks[3])))?;
    if n == 0 {
        return Err(Error::parse(lineno, "variable count must be at least 1"));
    }
    Ok((n, m))
}

fn push_clause(
    clauses: &mut Vec<Clause>,
    warnings: &mut Vec<String>,
    lits: Vec<Literal>,
    lineno: usize,
) {
    let c = Clause::new(lits).expect("nonempty");
    if c.is_tautology() {
        warnings.push(format!("line {lineno}: tautological clause dropped"));
    } else {
        clauses.push(c);
    }
}

/// Write a formula back out as DIMACS CNF.
pub fn serialize_dimacs(f: &CnfFormula) -> String {
    let mut out = String::new();
    let m = f.clauses().len() + usize::from(f.has_empty_clause());
    out.push_str(&format!("p cnf {} {}\n", f.n(), m));
    for c in f.clauses() {
        out.push_str(&c.to_string());
        out.push('\n');
    }
    if f.has_empty_clause() {
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_clause() {
        let f = parse_dimacs("p cnf 2 1\n1 2 0\n").unwrap();
        assert_eq!(f.n(), 2);
        assert_eq!(f.clauses().len(), 1);
        assert_eq!(
            f.clauses()[0].literals(),
            &[Literal::pos(0), Literal::pos(1)]
        );
        assert!(f.meta.warnings.is_empty());
    }

    #[test]
    fn contradictory_units() {
        let f = parse_dimacs("p cnf 1 2\n1 0\n-1 0").unwrap();
        assert_eq!(f.clauses().len(), 2);
        assert_eq!(f.clauses()[1].literals(), &[Literal::neg(0)]);
    }

    #[test]
    fn comments_and_multiline_clauses() {
        let f = parse_dimacs("c x\np cnf 2 4\n1 2 0\n-1 2 0\n1 -2\n 0\n-1 -2 0\n").unwrap();
        assert_eq!(f.clauses().len(), 4);
        assert_eq!(f.meta.comments, vec!["x".to_string()]);
    }

    #[test]
    fn count_mismatch_is_warning() {
        let f = parse_dimacs("p cnf 2 3\n1 2 0\n").unwrap();
        assert_eq!(f.meta.warnings.len(), 1);
    }

    #[test]
    fn errors() {
        assert!(parse_dimacs("p cnf x 1\n1 0").is_err());
        assert!(parse_dimacs("p dnf 1 1\n1 0").is_err());
        assert!(parse_dimacs("1 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n3 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 -0 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 0 0\n").is_err());
        assert!(parse_dimacs("").is_err());
    }

    #[test]
    fn empty_clause_marks_unsat() {
        let f = parse_dimacs("p cnf 2 2\n1 0\n0\n").unwrap();
        assert!(f.has_empty_clause());
        assert_eq!(f.clauses().len(), 1);
    }

    #[test]
    fn tautology_dropped() {
        let f = parse_dimacs("p cnf 2 2\n1 -1 0\n2 0\n").unwrap();
        assert_eq!(f.clauses().len(), 1);
        assert_eq!(f.meta.warnings.len(), 1);
    }

    #[test]
    fn satlib_trailer() {
        let f = parse_dimacs("p cnf 2 1\n1 2 0\n%\n0\n").unwrap();
        assert_eq!(f.clauses().len(), 1);
        assert!(f.meta.warnings.is_empty());
    }
}
