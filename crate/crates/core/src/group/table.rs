use std::collections::HashMap;

use super::{ElemSet, GroupError};

/// Orders up to this size get the full cubic associativity check; larger
/// tables use Light's test over a generating set.
const FULL_ASSOCIATIVITY_LIMIT: usize = 64;

/// A finite group given by its multiplication table over indices `0..order`.
///
/// The identity is always index 0. Products are `table[g * order + h] = g·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    elem_order: Vec<usize>,
    exponent: usize,
}

impl GroupTable {
    /// Validates a Cayley table and builds a group from it.
    ///
    /// The identity may sit at any index in the input; it is relabelled to
    /// index 0 (by swapping it with the element at 0). Error messages refer to
    /// the indices of the input table.
    pub fn from_cayley(rows: &[Vec<usize>], name: impl Into<String>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare {
                    row: r,
                    len: row.len(),
                    expected: n,
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::IndexOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                    });
                }
            }
            table.extend_from_slice(row);
        }
        let e = find_identity(&table, n).ok_or(GroupError::NoIdentity)?;
        for g in 0..n {
            if !(0..n).any(|h| table[g * n + h] == e && table[h * n + g] == e) {
                return Err(GroupError::NoInverse { element: g });
            }
        }
        check_associative(&table, n)?;

        let table = if e == 0 {
            table
        } else {
            // swap labels 0 and e
            let relabel = |x: usize| {
                if x == 0 {
                    e
                } else if x == e {
                    0
                } else {
                    x
                }
            };
            let mut out = vec![0; n * n];
            for g in 0..n {
                for h in 0..n {
                    out[relabel(g) * n + relabel(h)] = relabel(table[g * n + h]);
                }
            }
            out
        };
        Ok(Self::from_trusted(table, n, name.into()))
    }

    /// Builds the group generated by permutations of `{0..degree-1}`.
    ///
    /// Products compose left to right: `(g·h)(i) = h(g(i))`. Elements are
    /// numbered in breadth-first discovery order starting from the identity.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
        name: impl Into<String>,
    ) -> Result<Self, GroupError> {
        for (gi, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(GroupError::InvalidPermutation {
                    generator: gi,
                    reason: format!("length {} differs from degree {}", g.len(), degree),
                });
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::InvalidPermutation {
                        generator: gi,
                        reason: format!("image {x} repeated or out of range"),
                    });
                }
            }
        }

        let compose =
            |g: &[usize], h: &[usize]| -> Vec<usize> { g.iter().map(|&i| h[i]).collect() };
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elems.len() {
            for g in generators {
                let y = compose(&elems[head], g);
                if !index.contains_key(&y) {
                    if elems.len() >= cap {
                        return Err(GroupError::ClosureTooLarge { cap });
                    }
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            head += 1;
        }

        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        Self::from_cayley(&rows, name)
    }

    /// Builds a table already known to satisfy the group axioms with identity 0.
    pub(crate) fn from_trusted(table: Vec<usize>, n: usize, name: String) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g * n + h] == 0)
                .expect("trusted table has inverses");
        }
        let mut elem_order = vec![1; n];
        for g in 1..n {
            let mut x = g;
            let mut k = 1;
            while x != 0 {
                x = table[x * n + g];
                k += 1;
            }
            elem_order[g] = k;
        }
        let exponent = elem_order.iter().fold(1, |acc, &o| lcm(acc, o));
        GroupTable {
            name,
            order: n,
            table,
            inverse,
            elem_order,
            exponent,
        }
    }

    /// Builds a table from a product closure over `0..n`, validating it.
    pub(crate) fn synthesize(
        n: usize,
        name: impl Into<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupError> {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|g| (0..n).map(|h| mul(g, h)).collect())
            .collect();
        Self::from_cayley(&rows, name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    #[inline]
    pub fn elem_order(&self, g: usize) -> usize {
        self.elem_order[g]
    }

    pub fn elem_orders(&self) -> &[usize] {
        &self.elem_order
    }

    /// `x g x⁻¹`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inverse[x])
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let k = k % self.elem_order[g];
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (g + 1..self.order).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// The prime `p` if the order is a positive power of `p`.
    pub fn prime(&self) -> Option<usize> {
        prime_of_power(self.order)
    }

    /// True when the order is a power of `p` (the trivial group counts).
    pub fn is_p_group(&self, p: usize) -> bool {
        is_power_of(self.order, p)
    }

    /// Closure of `start ∪ gens` under right multiplication by `gens`.
    ///
    /// When `start` is already a subgroup (or just the identity) the result is
    /// the subgroup generated by `start` and `gens`, provided `gens` includes a
    /// generating set of `start`.
    pub fn closure_from(&self, start: &ElemSet, gens: &[usize]) -> ElemSet {
        let mut set = start.clone();
        set.insert(0);
        let mut work: Vec<usize> = set.iter().collect();
        while let Some(w) = work.pop() {
            for &s in gens {
                let y = self.mul(w, s);
                if set.insert(y) {
                    work.push(y);
                }
            }
        }
        set
    }

    /// The subgroup generated by `gens`, as an element set.
    pub fn closure(&self, gens: &[usize]) -> ElemSet {
        self.closure_from(&ElemSet::from_iter(self.order, [0]), gens)
    }

    /// Element set of the cyclic subgroup `⟨g⟩`.
    pub fn cyclic(&self, g: usize) -> ElemSet {
        let mut set = ElemSet::empty(self.order);
        let mut x = 0;
        loop {
            set.insert(x);
            x = self.mul(x, g);
            if x == 0 {
                return set;
            }
        }
    }
}

fn find_identity(table: &[usize], n: usize) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|g| table[e * n + g] == g && table[g * n + e] == g))
}

fn check_associative(table: &[usize], n: usize) -> Result<(), GroupError> {
    let m = |a: usize, b: usize| table[a * n + b];
    let test_middle = |b: usize| -> Result<(), GroupError> {
        for a in 0..n {
            let ab = m(a, b);
            for c in 0..n {
                if m(ab, c) != m(a, m(b, c)) {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
        Ok(())
    };
    if n <= FULL_ASSOCIATIVITY_LIMIT {
        return (0..n).try_for_each(test_middle);
    }
    // Light's test: the elements b with (ab)c = a(bc) for all a, c form a
    // submagma, so checking a generating set of the magma suffices.
    generating_set(table, n)
        .into_iter()
        .try_for_each(test_middle)
}

/// A generating set of the magma: greedy, each generator lies outside the
/// submagma generated by the previous ones.
fn generating_set(table: &[usize], n: usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    for x in 0..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        inside[x] = true;
        let mut work = vec![x];
        members.push(x);
        while let Some(a) = work.pop() {
            let snapshot = members.len();
            for i in 0..snapshot {
                let b = members[i];
                for y in [table[a * n + b], table[b * n + a]] {
                    if !inside[y] {
                        inside[y] = true;
                        members.push(y);
                        work.push(y);
                    }
                }
            }
        }
    }
    gens
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn is_power_of(n: usize, p: usize) -> bool {
    if p < 2 || n == 0 {
        return false;
    }
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// `Some(p)` when `n = p^k` with `k ≥ 1`.
pub fn prime_of_power(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    is_power_of(n, p).then_some(p)
}
