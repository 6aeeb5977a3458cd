use num_integer::Roots;

use crate::error::{Error, Result};

/// `C_d` is nonempty exactly when `d ≥ 8` and `d ≡ 0, 2 (mod 6)`.
pub fn disc_nonempty(d: i64) -> bool {
    d >= 8 && matches!(d.rem_euclid(6), 0 | 2)
}

/// Nonempty and not divisible by 4, 9, or any odd prime `p ≡ 2 (mod 3)`.
pub fn admissible(d: i64) -> bool {
    if !disc_nonempty(d) || d % 4 == 0 || d % 9 == 0 {
        return false;
    }
    let mut n = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            if p % 2 == 1 && p % 3 == 2 {
                return false;
            }
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    !(n > 1 && n % 2 == 1 && n % 3 == 2)
}

pub fn admissible_up_to(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|&d| admissible(d)).collect()
}

/// `N = ⌈2√(n₁n₂ − min(n₁, n₂)) − 1⌉` with `nᵢ = ⌊dᵢ/6⌋`, i.e.
/// `⌈√(4m)⌉ − 1`, in integer arithmetic.
pub fn tau_bound(d1: i64, d2: i64) -> Result<i64> {
    for d in [d1, d2] {
        if !disc_nonempty(d) {
            return Err(Error::InvalidDiscriminant(format!("C_{d} is empty")));
        }
    }
    if d1 == d2 {
        return Err(Error::InvalidDiscriminant(format!("d1 = d2 = {d1}")));
    }
    let (n1, n2) = (d1 / 6, d2 / 6);
    let m = n1 * n2 - n1.min(n2);
    let four_m = 4 * m;
    let r = four_m.sqrt();
    let ceil = if r * r == four_m { r } else { r + 1 };
    Ok(ceil - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicates() {
        assert!(disc_nonempty(8) && disc_nonempty(20) && !disc_nonempty(7) && !disc_nonempty(6));
        assert!(admissible(14) && !admissible(20) && !admissible(18));
        assert_eq!(admissible_up_to(14, 80), vec![14, 26, 38, 42, 62, 74, 78]);
    }

    #[test]
    fn bounds() {
        assert_eq!(tau_bound(20, 26).unwrap(), 5);
        assert_eq!(tau_bound(14, 20).unwrap(), 3);
        assert_eq!(tau_bound(20, 146).unwrap(), 16);
        assert_eq!(tau_bound(20, 38).unwrap(), 7);
        assert_eq!(tau_bound(20, 42).unwrap(), 8);
        assert_eq!(tau_bound(20, 62).unwrap(), 10);
        assert_eq!(tau_bound(20, 18).unwrap(), 4);
        assert!(tau_bound(20, 20).is_err());
        assert!(tau_bound(20, 7).is_err());
    }
}
