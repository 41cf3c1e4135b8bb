use std::path::Path;

use serde::Deserialize;

use super::{GroupError, GroupTable};
use crate::Limits;

/// On-disk group description: either a Cayley table or permutation
/// generators in one-line notation. Indices are 0-based.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum GroupFile {
    Cayley {
        name: String,
        cayley: Vec<Vec<usize>>,
    },
    Permutations {
        name: String,
        degree: usize,
        perm_gens: Vec<Vec<usize>>,
    },
}

impl GroupFile {
    pub fn into_group(self, limits: &Limits) -> Result<GroupTable, GroupError> {
        let g = match self {
            GroupFile::Cayley { name, cayley } => GroupTable::from_cayley(&cayley, name)?,
            GroupFile::Permutations {
                name,
                degree,
                perm_gens,
            } => GroupTable::from_permutations(degree, &perm_gens, limits.closure_cap, name)?,
        };
        if g.order() > limits.order_cap {
            return Err(GroupError::OrderCapExceeded {
                order: g.order(),
                cap: limits.order_cap,
            });
        }
        Ok(g)
    }
}

pub fn parse_group_json(text: &str, limits: &Limits) -> Result<GroupTable, GroupError> {
    let file: GroupFile =
        serde_json::from_str(text).map_err(|e| GroupError::InvalidGroupFile(e.to_string()))?;
    file.into_group(limits)
}

pub fn load_group_file(path: &Path, limits: &Limits) -> Result<GroupTable, GroupError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::InvalidGroupFile(format!("{}: {e}", path.display())))?;
    parse_group_json(&text, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_file() {
        let g = parse_group_json(
            r#"{"name":"C2","cayley":[[0,1],[1,0]]}"#,
            &Limits::default(),
        )
        .unwrap();
        assert_eq!((g.name(), g.order()), ("C2", 2));
    }

    #[test]
    fn permutation_file() {
        let text = r#"{"name":"D8","degree":4,"perm_gens":[[1,2,3,0],[0,3,2,1]]}"#;
        let g = parse_group_json(text, &Limits::default()).unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn malformed_files() {
        assert!(matches!(
            parse_group_json("{not json", &Limits::default()),
            Err(GroupError::InvalidGroupFile(_))
        ));
        assert!(matches!(
            parse_group_json(r#"{"name":"x"}"#, &Limits::default()),
            Err(GroupError::InvalidGroupFile(_))
        ));
        let err = parse_group_json(r#"{"name":"x","cayley":[[0,1],[1,1]]}"#, &Limits::default())
            .unwrap_err();
        assert_eq!(err, GroupError::NoInverse { element: 1 });
    }
}
