use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundKind {
    /// Lower bound on d(B(delta)^perp) for binary narrow-sense BCH codes
    /// of length 2^m - 1.
    CarlitzUchiyama { m: u32, delta: u64 },
    /// Singleton upper bound m(delta - 1)/2 + 1 on d(B(delta)).
    SingletonWt { m: u32, delta: u64 },
    /// n - k + 1.
    Singleton { n: u64, k: u64 },
}

fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Value of the bound. The Carlitz-Uchiyama value
/// 2^(m-1) - 2^(m/2) (delta-1)/2 is rounded up to the least integer weight
/// it allows (it may be negative, i.e. vacuous).
pub fn bound(kind: BoundKind) -> i64 {
    match kind {
        BoundKind::CarlitzUchiyama { m, delta } => {
            let t = (delta.saturating_sub(1) / 2) as u128;
            let half = 1i128 << (m - 1);
            // 2^(m/2) t = sqrt(2^m t^2); ceil(a - x) = a - floor(x)
            let x = isqrt((1u128 << m) * t * t);
            (half - x as i128) as i64
        }
        BoundKind::SingletonWt { m, delta } => {
            (m as u64 * (delta.saturating_sub(1) / 2) + 1) as i64
        }
        BoundKind::Singleton { n, k } => n as i64 - k as i64 + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(bound(BoundKind::CarlitzUchiyama { m: 10, delta: 31 }), 32);
        assert_eq!(bound(BoundKind::SingletonWt { m: 10, delta: 31 }), 151);
        assert_eq!(bound(BoundKind::Singleton { n: 9, k: 9 }), 1);
        // m = 5, delta = 3: 16 - sqrt(32) = 10.34..., least weight 11
        assert_eq!(bound(BoundKind::CarlitzUchiyama { m: 5, delta: 3 }), 11);
        assert!(bound(BoundKind::CarlitzUchiyama { m: 4, delta: 9 }) < 0);
    }

    #[test]
    fn odd_m_matches_floating_point() {
        for m in [3u32, 5, 7, 9, 11] {
            for delta in (3..40).step_by(2) {
                let t = ((delta - 1) / 2) as f64;
                let real = 2f64.powi(m as i32 - 1) - 2f64.powf(m as f64 / 2.0) * t;
                assert_eq!(
                    bound(BoundKind::CarlitzUchiyama { m, delta }),
                    real.ceil() as i64,
                    "m={m} delta={delta}"
                );
            }
        }
    }
}
