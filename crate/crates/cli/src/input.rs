use std::path::Path;

use num_rational::BigRational;
use trigdunkl_core::coeff::{CouplingVector, RatFunc};
use trigdunkl_core::laurent::{LocalizedDoc, LocalizedElement};
use trigdunkl_core::rootsys::{Family, RootSystemSpec};
use trigdunkl_core::{CorootVector, LaurentElement, RootSystem, Weight};

use crate::CliError;

/// `E8`, or `E` together with `--rank 8`.
pub fn root_system(ty: Option<&str>, rank: Option<usize>) -> Result<RootSystem, CliError> {
    let ty = ty.ok_or_else(|| CliError::Usage("--type is required".into()))?;
    let spec: RootSystemSpec = if ty.chars().any(|c| c.is_ascii_digit()) {
        let spec: RootSystemSpec = ty.parse()?;
        if let Some(r) = rank {
            if r != spec.rank {
                return Err(CliError::Usage(format!("--rank {r} contradicts --type {ty}")));
            }
        }
        spec
    } else {
        let family: Family = ty.parse()?;
        let rank = rank.ok_or_else(|| CliError::Usage(format!("--rank is required with --type {ty}")))?;
        RootSystemSpec::new(family, rank)?
    };
    Ok(RootSystem::new(spec)?)
}

/// An exact fraction such as `1/6` or `-2`; decimals are rejected.
pub fn rational(s: &str) -> Result<BigRational, CliError> {
    let t = s.trim();
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(CliError::Usage(format!("`{s}` is not an exact fraction")));
    }
    t.parse()
        .map_err(|_| CliError::Usage(format!("`{s}` is not an exact fraction")))
}

fn list<T>(s: &str, what: &str, f: impl Fn(&str) -> Result<T, CliError>) -> Result<Vec<T>, CliError> {
    if s.trim().is_empty() {
        return Err(CliError::Usage(format!("empty {what}")));
    }
    s.split(',').map(|p| f(p.trim())).collect()
}

/// Comma-separated integers in the fundamental-weight basis.
pub fn weight(s: &str, rank: usize) -> Result<Weight, CliError> {
    let v = list(s, "weight", |p| {
        p.parse::<i64>()
            .map_err(|_| CliError::Usage(format!("`{p}` is not an integer")))
    })?;
    check_len(v.len(), rank, "--mu")?;
    Ok(Weight(v))
}

/// Comma-separated fractions in the simple-coroot basis.
pub fn coroot(s: &str, rank: usize) -> Result<CorootVector, CliError> {
    let v = list(s, "coroot vector", |p| Ok(RatFunc::from_rational(rational(p)?)))?;
    check_len(v.len(), rank, "--xi")?;
    Ok(CorootVector(v))
}

fn check_len(got: usize, rank: usize, flag: &str) -> Result<(), CliError> {
    if got != rank {
        return Err(CliError::Usage(format!("{flag} has {got} entries, expected {rank}")));
    }
    Ok(())
}

/// Symbolic couplings with the given values substituted. `--k2` sets the
/// doubled-root coupling and is accepted for BC only.
pub fn couplings(
    rs: &RootSystem,
    k: Option<&str>,
    kp: Option<&str>,
    k2: Option<&str>,
) -> Result<CouplingVector, CliError> {
    let k = k.map(rational).transpose()?;
    let kp = kp.map(rational).transpose()?;
    let mut kv = rs.symbolic_couplings().specialize(k.as_ref(), kp.as_ref())?;
    if let Some(k2) = k2 {
        if rs.family() != Family::BC {
            return Err(CliError::Usage("--k2 applies to BC only".into()));
        }
        kv.k_extra = RatFunc::from_rational(rational(k2)?);
    }
    Ok(kv)
}

/// A Laurent element from a JSON file: either a term list or a localized
/// document whose denominator cancels.
pub fn laurent_file(rs: &RootSystem, path: &Path) -> Result<LaurentElement, CliError> {
    let loc = localized_file(rs, path)?;
    loc.to_laurent(rs)
        .ok_or_else(|| CliError::Usage(format!("{} is not a Laurent polynomial", path.display())))
}

pub fn localized_file(rs: &RootSystem, path: &Path) -> Result<LocalizedElement, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if let Ok(f) = serde_json::from_str::<LaurentElement>(&text) {
        check_rank(rs, &f)?;
        return Ok(LocalizedElement::from_laurent(f));
    }
    let doc: LocalizedDoc =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let f = LocalizedElement::from_doc(rs, &doc)?;
    check_rank(rs, f.numerator())?;
    Ok(f)
}

fn check_rank(rs: &RootSystem, f: &LaurentElement) -> Result<(), CliError> {
    match f.support().find(|w| w.rank() != rs.rank()) {
        Some(w) => Err(CliError::Usage(format!("weight {w} does not have rank {}", rs.rank()))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions() {
        assert_eq!(rational("1/6").unwrap(), BigRational::new(1.into(), 6.into()));
        assert_eq!(rational("-2").unwrap(), BigRational::from_integer((-2).into()));
        assert!(rational("0.5").is_err());
        assert!(rational("1e3").is_err());
        assert!(rational("x").is_err());
    }

    #[test]
    fn weights_and_coroots() {
        assert_eq!(weight("1,-2", 2).unwrap(), Weight(vec![1, -2]));
        assert!(weight("1", 2).is_err());
        assert!(weight("", 1).is_err());
        let xi = coroot("1/2, 3", 2).unwrap();
        assert_eq!(xi.0[0], RatFunc::frac(1, 2));
    }

    #[test]
    fn type_selection() {
        assert_eq!(root_system(Some("E8"), None).unwrap().rank(), 8);
        assert_eq!(root_system(Some("b"), Some(3)).unwrap().rank(), 3);
        assert!(root_system(Some("E8"), Some(7)).is_err());
        assert!(root_system(Some("D"), None).is_err());
        assert!(root_system(None, None).is_err());
        assert!(root_system(Some("D3"), None).is_err());
    }

    #[test]
    fn k2_only_for_bc() {
        let a2 = root_system(Some("A2"), None).unwrap();
        assert!(couplings(&a2, None, None, Some("1/3")).is_err());
        let bc2 = root_system(Some("BC2"), None).unwrap();
        let kv = couplings(&bc2, Some("1/2"), None, Some("1/3")).unwrap();
        assert_eq!(kv.k_extra, RatFunc::frac(1, 3));
        assert_eq!(kv.k, RatFunc::frac(1, 2));
    }
}
