use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polyhedra::DEFAULT_POWER_GENERATORS;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerComparison {
    pub m: u32,
    pub equal: bool,
    /// A generator of `I^(m)` outside `I^m` when they differ.
    pub witness: Option<Monomial>,
}

pub fn symbolic_equals_ordinary(ideal: &MonomialIdeal, m_max: u32) -> Result<Vec<PowerComparison>> {
    symbolic_equals_ordinary_with(ideal, m_max, DEFAULT_POWER_GENERATORS)
}

/// Compare `I^(m)` with `I^m` for `m = 1..=m_max`. Since `I^m ⊆ I^(m)`, the two
/// are equal iff every generator of `I^(m)` lies in `I^m`.
pub fn symbolic_equals_ordinary_with(
    ideal: &MonomialIdeal,
    m_max: u32,
    max_generators: usize,
) -> Result<Vec<PowerComparison>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut out = Vec::with_capacity(m_max as usize);
    let mut ordinary = ideal.clone();
    for m in 1..=m_max {
        if m > 1 {
            ordinary = ordinary.multiply(ideal)?;
            if ordinary.generators().len() > max_generators {
                return Err(Error::guard(
                    "ordinary power generators",
                    max_generators,
                    ordinary.generators().len(),
                ));
            }
        }
        let symbolic = ideal.symbolic_power_capped(m, max_generators)?;
        let mut witness = None;
        for g in symbolic.generators() {
            if !ordinary.contains(g)? {
                witness = Some(g.clone());
                break;
            }
        }
        out.push(PowerComparison {
            m,
            equal: witness.is_none(),
            witness,
        });
    }
    Ok(out)
}
