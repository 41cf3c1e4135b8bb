use super::Subgroup;

/// Conjugacy classes of a subgroup acting on itself.
///
/// Classes are numbered by ascending representative, and each representative
/// is the smallest element index in its class; class 0 is `{1}`.
#[derive(Clone, Debug)]
pub struct ConjClasses {
    owner: Subgroup,
    /// class index per ambient element, `u32::MAX` outside the owner
    lookup: Vec<u32>,
    reps: Vec<usize>,
    sizes: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl ConjClasses {
    pub fn owner(&self) -> &Subgroup {
        &self.owner
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn inverse_class(&self) -> &[usize] {
        &self.inverse_class
    }

    /// Class of an ambient element, `None` if it lies outside the owner.
    #[inline]
    pub fn class_of_elem(&self, g: usize) -> Option<usize> {
        match self.lookup[g] {
            u32::MAX => None,
            c => Some(c as usize),
        }
    }

    /// Class index for each owner element, in the owner's element order.
    pub fn class_of(&self) -> Vec<usize> {
        self.owner
            .elems()
            .iter()
            .map(|&g| self.lookup[g] as usize)
            .collect()
    }
}

pub fn conjugacy_classes(h: &Subgroup) -> ConjClasses {
    let g = h.group();
    let mut lookup = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for &x in h.elems() {
        if lookup[x] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        let mut size = 0;
        for &y in h.elems() {
            let z = g.conj(y, x);
            if lookup[z] == u32::MAX {
                lookup[z] = c;
                size += 1;
            }
        }
        sizes.push(size);
    }
    let inverse_class = reps.iter().map(|&r| lookup[g.inv(r)] as usize).collect();
    let out = ConjClasses {
        owner: h.clone(),
        lookup,
        reps,
        sizes,
        inverse_class,
    };
    debug_assert_eq!(out.sizes.iter().sum::<usize>(), h.order());
    out
}
