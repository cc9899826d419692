//! Finite groups given by a multiplication table, identity at index 0.

use crate::error::{Error, Result};

pub type GroupElement = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<GroupElement>>,
    inverses: Vec<GroupElement>,
}

impl FiniteGroup {
    /// Builds a group, rejecting tables that fail [`group_validate`].
    pub fn new(table: Vec<Vec<GroupElement>>) -> Result<FiniteGroup> {
        let problems = group_validate(&table);
        if let Some(p) = problems.first() {
            return Err(Error::InvalidGroup(p.clone()));
        }
        let n = table.len();
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == 0).expect("validated"))
            .collect();
        Ok(FiniteGroup { table, inverses })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(table).expect("cyclic group")
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// S₃ with elements listed as permutations of {0,1,2} in the order
    /// id, (01), (02), (12), (012), (021).
    pub fn symmetric3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        FiniteGroup::new(table).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn elements(&self) -> std::ops::Range<GroupElement> {
        0..self.order()
    }

    pub fn table(&self) -> &[Vec<GroupElement>] {
        &self.table
    }

    pub fn identity(&self) -> GroupElement {
        0
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.table[a][b]
    }

    pub fn mul3(&self, a: GroupElement, b: GroupElement, c: GroupElement) -> GroupElement {
        self.mul(self.mul(a, b), c)
    }

    pub fn inv(&self, a: GroupElement) -> GroupElement {
        self.inverses[a]
    }

    /// `conj(a, b) = b a b⁻¹`.
    pub fn conj(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.mul3(b, a, self.inv(b))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Lists every way the table fails to be a group with identity 0.
pub fn group_validate(table: &[Vec<GroupElement>]) -> Vec<String> {
    let n = table.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push("empty table".to_string());
        return out;
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            out.push(format!("row {a} has length {}", row.len()));
            return out;
        }
        if row.iter().any(|&x| x >= n) {
            out.push(format!("row {a} has an entry out of range"));
            return out;
        }
    }
    for a in 0..n {
        let mut seen = vec![false; n];
        for &x in &table[a] {
            seen[x] = true;
        }
        if seen.iter().any(|s| !s) {
            out.push(format!("row {a} not a permutation"));
        }
        let mut seen = vec![false; n];
        for row in table {
            seen[row[a]] = true;
        }
        if seen.iter().any(|s| !s) {
            out.push(format!("column {a} not a permutation"));
        }
        if table[0][a] != a || table[a][0] != a {
            out.push(format!("0 is not an identity for {a}"));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    out.push(format!("not associative at ({a},{b},{c})"));
                }
            }
        }
    }
    out
}
