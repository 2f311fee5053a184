//! Finite group multiplication tables.
//!
//! A [`GroupTable`] is the input to the pointed-ring and Tambara-Yamagami
//! constructors and the output of Picard-group extraction. Tables are
//! validated on construction: associativity, identity and inverse laws are
//! all checked exactly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest group order accepted by the named registry and the JSON loader.
pub const MAX_GROUP_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("group order {order} exceeds bound {bound}")]
    OrderBound { order: usize, bound: usize },
}

/// Multiplication table of a finite group on indices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Raw JSON form: `{"order": n, "mult": [[..]], "identity": e}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupData {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    /// Validates a raw table. The inverse map is derived, not supplied.
    pub fn new(data: GroupData) -> Result<Self, GroupError> {
        let n = data.order;
        if n == 0 {
            return Err(GroupError::InvalidGroupTable("order must be positive".into()));
        }
        if data.mult.len() != n || data.mult.iter().any(|row| row.len() != n) {
            return Err(GroupError::InvalidGroupTable(format!(
                "multiplication table must be {n} x {n}"
            )));
        }
        if data.identity >= n {
            return Err(GroupError::InvalidGroupTable(format!(
                "identity index {} out of range",
                data.identity
            )));
        }
        for (a, row) in data.mult.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    return Err(GroupError::InvalidGroupTable(format!(
                        "entry mult[{a}][{b}] = {c} out of range"
                    )));
                }
            }
        }
        let e = data.identity;
        for a in 0..n {
            if data.mult[e][a] != a || data.mult[a][e] != a {
                return Err(GroupError::InvalidGroupTable(format!(
                    "identity law fails at element {a}"
                )));
            }
        }
        // Inverses: each row must contain the identity exactly once, and
        // the left inverse must also work on the right.
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let mut found = None;
            for b in 0..n {
                if data.mult[a][b] == e {
                    if found.is_some() {
                        return Err(GroupError::InvalidGroupTable(format!(
                            "element {a} has more than one right inverse"
                        )));
                    }
                    found = Some(b);
                }
            }
            let b = found.ok_or_else(|| {
                GroupError::InvalidGroupTable(format!("element {a} has no inverse"))
            })?;
            if data.mult[b][a] != e {
                return Err(GroupError::InvalidGroupTable(format!(
                    "inverse of {a} is one-sided"
                )));
            }
            inverse[a] = b;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if data.mult[data.mult[a][b]][c] != data.mult[a][data.mult[b][c]] {
                        return Err(GroupError::InvalidGroupTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable { mult: data.mult, identity: e, inverse })
    }

    /// Cyclic group of order `n` with identity 0 and generator 1.
    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n >= 1, "cyclic group order must be positive");
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        GroupTable { mult, identity: 0, inverse }
    }

    /// Direct product; element `(a, b)` is encoded as `a * rhs.order() + b`.
    pub fn direct_product(&self, rhs: &GroupTable) -> GroupTable {
        let (n, m) = (self.order(), rhs.order());
        let enc = |a: usize, b: usize| a * m + b;
        let mut mult = vec![vec![0usize; n * m]; n * m];
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        mult[enc(a1, b1)][enc(a2, b2)] =
                            enc(self.mult[a1][a2], rhs.mult[b1][b2]);
                    }
                }
            }
        }
        let inverse = (0..n * m)
            .map(|x| enc(self.inverse[x / m], rhs.inverse[x % m]))
            .collect();
        GroupTable { mult, identity: enc(self.identity, rhs.identity), inverse }
    }

    /// Resolves a group name: `Zn` for cyclic groups, `x`-separated products
    /// such as `Z2xZ2xZ3`, and the alias `V4` for `Z2xZ2`. Order is capped at
    /// [`MAX_GROUP_ORDER`].
    pub fn by_name(name: &str) -> Result<GroupTable, GroupError> {
        let name = name.trim();
        if name.eq_ignore_ascii_case("V4") {
            return Ok(GroupTable::cyclic(2).direct_product(&GroupTable::cyclic(2)));
        }
        let mut table: Option<GroupTable> = None;
        for part in name.split('x') {
            let part = part.trim();
            let n: usize = part
                .strip_prefix(['Z', 'z'])
                .and_then(|digits| digits.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| GroupError::UnknownName(name.to_string()))?;
            table = Some(match table {
                None => GroupTable::cyclic(n),
                Some(t) => t.direct_product(&GroupTable::cyclic(n)),
            });
            let order = table.as_ref().unwrap().order();
            if order > MAX_GROUP_ORDER {
                return Err(GroupError::OrderBound { order, bound: MAX_GROUP_ORDER });
            }
        }
        table.ok_or_else(|| GroupError::UnknownName(name.to_string()))
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mult[a][b] == self.mult[b][a]))
    }

    /// Order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Checks that `subset` is a subgroup normal in the whole group.
    pub fn is_normal_subgroup(&self, subset: &[usize]) -> bool {
        let set: std::collections::BTreeSet<usize> = subset.iter().copied().collect();
        if !set.contains(&self.identity) || set.iter().any(|&a| a >= self.order()) {
            return false;
        }
        for &a in &set {
            if !set.contains(&self.inverse(a)) {
                return false;
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return false;
                }
            }
        }
        for g in 0..self.order() {
            for &a in &set {
                let conj = self.mul(self.mul(g, a), self.inverse(g));
                if !set.contains(&conj) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_data(&self) -> GroupData {
        GroupData { order: self.order(), mult: self.mult.clone(), identity: self.identity }
    }
}

/// S3 as permutations of {0,1,2}: indices 0=e, 1=(012), 2=(021), 3=(01), 4=(02), 5=(12).
/// Shared by tests across modules; the catalog itself stays abelian-only.
#[cfg(test)]
pub(crate) fn s3_table() -> GroupTable {
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [2, 1, 0], [0, 2, 1]];
    let compose = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let index = |p: [usize; 3]| perms.iter().position(|&x| x == p).unwrap();
    let mult = (0..6)
        .map(|a| (0..6).map(|b| index(compose(perms[a], perms[b]))).collect())
        .collect();
    GroupTable::new(GroupData { order: 6, mult, identity: 0 }).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables_are_valid() {
        for n in 1..=12 {
            let g = GroupTable::cyclic(n);
            GroupTable::new(g.to_data()).expect("cyclic table must validate");
            assert!(g.is_abelian());
            assert_eq!(g.element_order(if n > 1 { 1 } else { 0 }), n);
        }
    }

    #[test]
    fn product_and_names() {
        let v4 = GroupTable::by_name("V4").unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        // every non-identity element of V4 has order 2
        for a in 1..4 {
            assert_eq!(v4.element_order(a), 2);
        }
        let z6 = GroupTable::by_name("Z2xZ3").unwrap();
        assert_eq!(z6.order(), 6);
        assert!(z6.is_abelian());
        assert!(GroupTable::by_name("Z65").is_err());
        assert!(GroupTable::by_name("Q8").is_err());
    }

    #[test]
    fn rejects_broken_tables() {
        // swap one entry of Z3 so associativity breaks
        let mut data = GroupTable::cyclic(3).to_data();
        data.mult[1][1] = 1;
        let err = GroupTable::new(data).unwrap_err();
        assert!(matches!(err, GroupError::InvalidGroupTable(_)));
    }

    #[test]
    fn s3_table_is_valid_but_not_abelian() {
        let s3 = s3_table();
        assert!(!s3.is_abelian());
        assert!(s3.is_normal_subgroup(&[0, 1, 2]));
        assert!(!s3.is_normal_subgroup(&[0, 3]));
    }
}
