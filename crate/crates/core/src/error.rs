use thiserror::Error;

use crate::character::CharError;
use crate::cyclotomic::CycError;
use crate::group::GroupError;
use crate::poset::PosetError;
use crate::verify::VerifyError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
