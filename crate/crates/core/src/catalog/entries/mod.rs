//! The identity table, one submodule per family.

use std::sync::OnceLock;

use super::Identity;

mod apery;
mod hurwitz;
mod ky;
mod poly;
mod star;

pub(super) fn all() -> &'static [Identity] {
    static ALL: OnceLock<Vec<Identity>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut v: Vec<Identity> =
            [poly::entries(), ky::entries(), star::entries(), hurwitz::entries(), apery::entries()]
                .into_iter()
                .flatten()
                .collect();
        v.sort_by(|a, b| a.id.cmp(b.id));
        v
    })
}
