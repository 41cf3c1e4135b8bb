use super::{ElemSet, GroupError, GroupTable};

/// `A ≅ C_{d_1} × … × C_{d_k}` with `d_1 ≥ … ≥ d_k > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianDecomp {
    pub factors: Vec<usize>,
    pub generators: Vec<usize>,
    /// exponent tuple of every element of `A`, indexed by element
    pub dlog: Vec<Vec<usize>>,
}

/// Splits an abelian group into cyclic factors.
///
/// Repeatedly takes an element `a` of maximal order in what remains and a
/// subgroup `B` maximal with `B ∩ ⟨a⟩ = 1`; such a `B` is a complement to
/// `⟨a⟩`, and the process recurses on `B`.
pub fn abelian_decomposition(a: &GroupTable) -> Result<AbelianDecomp, GroupError> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let n = a.order();
    let mut remaining = ElemSet::from_iter(n, 0..n);
    let mut factors = Vec::new();
    let mut generators = Vec::new();
    while remaining.len() > 1 {
        let top = remaining
            .iter()
            .max_by_key(|&x| (a.elem_order(x), std::cmp::Reverse(x)))
            .expect("nonempty");
        let cyc = a.cyclic(top);
        let mut complement = ElemSet::from_iter(n, [0]);
        for x in remaining.iter() {
            if complement.contains(x) {
                continue;
            }
            let mut gens = complement.to_vec();
            gens.push(x);
            let cand = a.closure(&gens);
            if cand.intersection(&cyc).len() == 1 {
                complement = cand;
            }
        }
        assert_eq!(
            complement.len() * cyc.len(),
            remaining.len(),
            "maximal disjoint subgroup must complement a maximal-order cyclic factor"
        );
        factors.push(cyc.len());
        generators.push(top);
        remaining = complement;
    }

    let mut dlog: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut tuple = vec![0usize; factors.len()];
    loop {
        let elem = tuple
            .iter()
            .zip(&generators)
            .fold(0, |acc, (&k, &g)| a.mul(acc, a.pow(g, k)));
        assert!(dlog[elem].is_none(), "generators are not independent");
        dlog[elem] = Some(tuple.clone());
        // mixed-radix increment
        let mut i = 0;
        while i < tuple.len() {
            tuple[i] += 1;
            if tuple[i] < factors[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == tuple.len() {
            break;
        }
    }
    let dlog = dlog
        .into_iter()
        .map(|d| d.expect("product of factors covers A"))
        .collect();
    Ok(AbelianDecomp {
        factors,
        generators,
        dlog,
    })
}
