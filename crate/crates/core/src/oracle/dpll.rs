use crate::sat::{Assignment, CnfFormula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DpllResult {
    Sat(Assignment),
    Unsat,
}

impl DpllResult {
    pub fn is_unsat(&self) -> bool {
        matches!(self, DpllResult::Unsat)
    }
}

/// Unit propagation, pure-literal elimination and chronological branching on
/// the lowest-index unassigned variable, `true` first.
pub fn dpll(f: &CnfFormula) -> DpllResult {
    if f.has_empty_clause() {
        return DpllResult::Unsat;
    }
    let clauses: Vec<Vec<(usize, bool)>> = f
        .effective_clauses()
        .map(|c| c.literals().iter().map(|l| (l.var, !l.negated)).collect())
        .collect();
    let mut assign = vec![None; f.n()];
    if !search(&clauses, &mut assign) {
        return DpllResult::Unsat;
    }
    let model = Assignment::new(assign.iter().map(|v| v.unwrap_or(false)).collect());
    assert!(f.evaluate(&model), "DPLL produced a non-model");
    DpllResult::Sat(model)
}

fn lit_value(assign: &[Option<bool>], (var, polarity): (usize, bool)) -> Option<bool> {
    assign[var].map(|v| v == polarity)
}

fn search(clauses: &[Vec<(usize, bool)>], assign: &mut Vec<Option<bool>>) -> bool {
    loop {
        let mut changed = false;
        // unit propagation
        let mut all_sat = true;
        for c in clauses {
            let mut unassigned = None;
            let mut open = 0;
            let mut sat = false;
            for &l in c {
                match lit_value(assign, l) {
                    Some(true) => {
                        sat = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        open += 1;
                        unassigned = Some(l);
                    }
                }
            }
            if sat {
                continue;
            }
            all_sat = false;
            match open {
                0 => return false,
                1 => {
                    let (var, pol) = unassigned.unwrap();
                    assign[var] = Some(pol);
                    changed = true;
                }
                _ => {}
            }
        }
        if all_sat {
            return true;
        }
        if changed {
            continue;
        }
        // pure literals among unsatisfied clauses
        let mut seen = vec![(false, false); assign.len()];
        for c in clauses {
            if c.iter().any(|&l| lit_value(assign, l) == Some(true)) {
                continue;
            }
            for &(var, pol) in c {
                if assign[var].is_none() {
                    if pol {
                        seen[var].0 = true;
                    } else {
                        seen[var].1 = true;
                    }
                }
            }
        }
        for (var, &(p, n)) in seen.iter().enumerate() {
            if p != n {
                assign[var] = Some(p);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let var = match assign.iter().position(Option::is_none) {
        Some(v) => v,
        None => {
            return clauses
                .iter()
                .all(|c| c.iter().any(|&l| lit_value(assign, l) == Some(true)))
        }
    };
    for value in [true, false] {
        let mut trial = assign.clone();
        trial[var] = Some(value);
        if search(clauses, &mut trial) {
            *assign = trial;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = CnfFormula::from_dimacs_clauses(1, &[&[1], &[-1]]).unwrap();
        assert!(dpll(&f).is_unsat());
        let f = CnfFormula::from_dimacs_clauses(2, &[&[1, 2]]).unwrap();
        match dpll(&f) {
            DpllResult::Sat(m) => assert!(f.evaluate(&m)),
            DpllResult::Unsat => panic!("satisfiable"),
        }
    }

    #[test]
    fn pigeonhole_3_into_2() {
        // x_{p,h}: pigeon p in hole h, var = 2p + h + 1
        let v = |p: i64, h: i64| 2 * p + h + 1;
        let mut cs: Vec<Vec<i64>> = (0..3).map(|p| vec![v(p, 0), v(p, 1)]).collect();
        for h in 0..2 {
            for a in 0..3 {
                for b in a + 1..3 {
                    cs.push(vec![-v(a, h), -v(b, h)]);
                }
            }
        }
        let refs: Vec<&[i64]> = cs.iter().map(|c| c.as_slice()).collect();
        let f = CnfFormula::from_dimacs_clauses(6, &refs).unwrap();
        assert!(dpll(&f).is_unsat());
    }
}
