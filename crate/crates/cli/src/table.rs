//! Enumeration of all convergent `ζ_sl4` values of one weight.

use std::fmt::Write as _;

use serde::Serialize;
use wittenmzv_core::numeric::Evaluator;
use wittenmzv_core::sl4::{classify, Reducer, RegularityClass, WittenArgs};

use crate::Failure;

/// Values closer than this are reported as equal.
pub const GROUP_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub args: [i64; 6],
    pub value: f64,
    pub case: Option<String>,
    pub terms: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Group {
    pub value: f64,
    pub members: Vec<[i64; 6]>,
    pub regular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub weight: i64,
    pub regular_only: bool,
    pub tuple_count: usize,
    pub distinct_count: usize,
    pub groups: Vec<Group>,
    pub rows: Vec<Row>,
}

/// Convergent six-slot tuples of total weight `w` in lexicographic order.
pub fn convergent_tuples(w: i64) -> Vec<[i64; 6]> {
    let mut out = Vec::new();
    let mut s = [0i64; 6];
    fn rec(s: &mut [i64; 6], i: usize, left: i64, out: &mut Vec<[i64; 6]>) {
        if i == 5 {
            s[5] = left;
            if WittenArgs::sl4(*s).map(|a| a.is_convergent()).unwrap_or(false) {
                out.push(*s);
            }
            return;
        }
        for v in 0..=left {
            s[i] = v;
            rec(s, i + 1, left - v, out);
        }
    }
    rec(&mut s, 0, w, &mut out);
    out
}

pub fn build(weight: i64, regular_only: bool) -> Result<Table, Failure> {
    if weight < 4 {
        return Err(Failure::Usage(format!("tables start at weight 4, got {weight}")));
    }
    let mut reducer = Reducer::new();
    let mut ev = Evaluator::new(160);
    let mut rows = Vec::new();
    for s in convergent_tuples(weight) {
        let case = match classify(&s)? {
            RegularityClass::Regular => None,
            RegularityClass::Irregular(c) => Some(c.name().to_string()),
        };
        if regular_only && case.is_some() {
            continue;
        }
        let combo = reducer.reduce_sl4(s)?;
        let value = ev.combo(&combo)?.value;
        rows.push(Row { args: s, value, case, terms: combo.len() });
    }
    let groups = group(&rows);
    Ok(Table {
        weight,
        regular_only,
        tuple_count: rows.len(),
        distinct_count: groups.len(),
        groups,
        rows,
    })
}

/// Clusters rows whose values chain together within [`GROUP_TOLERANCE`];
/// groups appear in order of their first member.
fn group(rows: &[Row]) -> Vec<Group> {
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by(|&a, &b| rows[a].value.total_cmp(&rows[b].value));
    let mut label = vec![0usize; rows.len()];
    let mut next = 0;
    for (k, &i) in order.iter().enumerate() {
        if k > 0 && (rows[i].value - rows[order[k - 1]].value).abs() > GROUP_TOLERANCE {
            next += 1;
        }
        label[i] = next;
    }
    let mut groups: Vec<(usize, Group)> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        match groups.iter_mut().find(|(l, _)| *l == label[i]) {
            Some((_, g)) => {
                g.members.push(row.args);
                g.regular &= row.case.is_none();
            }
            None => groups.push((
                label[i],
                Group { value: row.value, members: vec![row.args], regular: row.case.is_none() },
            )),
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

impl Table {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "weight {}{}: {} tuples, {} distinct values",
            self.weight,
            if self.regular_only { " (regular only)" } else { "" },
            self.tuple_count,
            self.distinct_count
        );
        for g in &self.groups {
            let members: Vec<String> = g
                .members
                .iter()
                .map(|m| format!("({})", m.map(|x| x.to_string()).join(",")))
                .collect();
            let tag = if g.regular { "" } else { "  [mixed weight]" };
            let _ = writeln!(s, "{:>16.10}  {}{tag}", g.value, members.join(" "));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_four_counts() {
        let t = build(4, false).unwrap();
        assert_eq!(t.tuple_count, 34);
        assert_eq!(t.distinct_count, 16);
        let mixed: usize = t.groups.iter().filter(|g| !g.regular).map(|g| g.members.len()).sum();
        assert_eq!(mixed, 13);
        let r = build(4, true).unwrap();
        assert_eq!(r.tuple_count, 21);
        assert!(r.groups.iter().all(|g| g.regular));
    }

    #[test]
    fn weight_five_contains_goldens() {
        let t = build(5, true).unwrap();
        for want in [0.6150150376, 0.4219127176] {
            assert!(t.groups.iter().any(|g| (g.value - want).abs() < 1e-9), "{want}");
        }
    }

    #[test]
    fn low_weight_rejected() {
        assert!(build(3, false).is_err());
    }
}
