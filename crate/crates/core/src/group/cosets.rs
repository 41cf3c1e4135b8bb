use super::{ElemSet, Subgroup};

/// One representative (the smallest element index) per `H\G/K` double coset,
/// in ascending order. `H` and `K` must be subgroups of `g`.
pub fn double_cosets(g: &Subgroup, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
    assert!(
        h.is_subgroup_of(g) && k.is_subgroup_of(g),
        "H, K must lie in G"
    );
    let t = g.group();
    let mut covered = ElemSet::empty(t.order());
    let mut reps = Vec::new();
    let mut total = 0;
    for &x in g.elems() {
        if covered.contains(x) {
            continue;
        }
        reps.push(x);
        for &a in h.elems() {
            let ax = t.mul(a, x);
            for &b in k.elems() {
                if covered.insert(t.mul(ax, b)) {
                    total += 1;
                }
            }
        }
    }
    assert_eq!(total, g.order(), "double cosets must partition G");
    reps
}
