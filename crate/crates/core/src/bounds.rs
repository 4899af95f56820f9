//! Closed-form upper bounds relating colouring numbers, cop-width and
//! flip-width.

use crate::error::{Error, Result};

fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow("bound product"))
}

/// `scol_r ≤ C(t-1, 2)(2r + 1)` for `K_t`-minor-free graphs.
///
/// The binomial vanishes for `t = 2`; callers treat a zero bound as
/// degenerate rather than as a claim.
pub fn bound_scol_ktminor(t: u64, r: u64) -> Result<u64> {
    need(t >= 2, "t must be at least 2")?;
    need(r >= 1, "r must be at least 1")?;
    mul(binom2(t - 1), 2 * r + 1)
}

/// `cw_r ≤ C(t-1, 2)(8r + 1)` for `K_t`-minor-free graphs.
pub fn bound_cw_ktminor(t: u64, r: u64) -> Result<u64> {
    need(t >= 2, "t must be at least 2")?;
    need(r >= 1, "r must be at least 1")?;
    mul(binom2(t - 1), 8 * r + 1)
}

/// `scol_r ≤ (4g + 6)(k + 1)(2r + 1)` for `(g, k)`-planar graphs.
pub fn bound_scol_gkplanar(g: u64, k: u64, r: u64) -> Result<u64> {
    need(r >= 1, "r must be at least 1")?;
    mul(mul(4 * g + 6, k + 1)?, 2 * r + 1)
}

/// `cw_r ≤ (4g + 6)(k + 1)(8r + 1)` for `(g, k)`-planar graphs.
pub fn bound_cw_gkplanar(g: u64, k: u64, r: u64) -> Result<u64> {
    need(r >= 1, "r must be at least 1")?;
    mul(mul(4 * g + 6, k + 1)?, 8 * r + 1)
}

/// `cw_r ≤ wcol_{2r} + 1`.
pub fn bound_cw_from_wcol(wcol_2r: u64) -> Result<u64> {
    wcol_2r.checked_add(1).ok_or(Error::Overflow("wcol + 1"))
}

/// `fw_r ≤ cw_r^t` for graphs without a `K_{t,t}` subgraph.
pub fn bound_fw_from_cw_kttfree(cw: u64, t: u32) -> Result<u64> {
    need(cw >= 1, "cop-width must be at least 1")?;
    need(t >= 1, "t must be at least 1")?;
    cw.checked_pow(t).ok_or(Error::Overflow("cw^t"))
}

/// `fw_r ≤ π_G(k) + k` for graphs with `cw_r ≤ k`.
pub fn bound_fw_lift(pi: u64, k: u64) -> Result<u64> {
    pi.checked_add(k).ok_or(Error::Overflow("pi + k"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ktminor() {
        assert_eq!(bound_scol_ktminor(5, 1).unwrap(), 18);
        assert_eq!(bound_scol_ktminor(4, 2).unwrap(), 15);
        assert_eq!(bound_scol_ktminor(2, 7).unwrap(), 0);
        assert_eq!(bound_scol_ktminor(5, 4).unwrap(), 54);
        assert_eq!(bound_cw_ktminor(5, 1).unwrap(), 54);
        assert_eq!(bound_cw_ktminor(3, 1).unwrap(), 9);
        assert_eq!(bound_cw_ktminor(2, 1).unwrap(), 0);
        assert!(bound_scol_ktminor(1, 1).is_err());
        assert!(bound_cw_ktminor(5, 0).is_err());
    }

    #[test]
    fn gkplanar() {
        assert_eq!(bound_scol_gkplanar(1, 1, 1).unwrap(), 60);
        assert_eq!(bound_cw_gkplanar(1, 1, 1).unwrap(), 180);
        assert_eq!(bound_scol_gkplanar(0, 0, 1).unwrap(), 18);
        assert_eq!(bound_cw_gkplanar(0, 0, 1).unwrap(), 54);
        assert!(bound_scol_gkplanar(0, 0, 0).is_err());
        assert!(bound_cw_gkplanar(0, 0, 0).is_err());
    }

    #[test]
    fn simple_bounds() {
        assert_eq!(bound_cw_from_wcol(3).unwrap(), 4);
        assert_eq!(bound_cw_from_wcol(1).unwrap(), 2);
        assert_eq!(bound_fw_from_cw_kttfree(2, 3).unwrap(), 8);
        assert_eq!(bound_fw_from_cw_kttfree(1, 9).unwrap(), 1);
        assert!(matches!(bound_fw_from_cw_kttfree(1 << 40, 2), Err(Error::Overflow(_))));
        assert_eq!(bound_fw_lift(1, 1).unwrap(), 2);
        assert_eq!(bound_fw_lift(2, 3).unwrap(), 5);
    }
}
