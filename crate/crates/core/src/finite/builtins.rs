//! Small groups built from generators, standing in for the discrete and
//! finite analogues of the Lie groups in the catalog.

use super::group::FiniteGroup;
use crate::error::{Error, Result};

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn require_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::BadParameter(format!("{p} is not prime")))
    }
}

/// `Z/n`, generated by 1.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic(n) needs n ≥ 1".into()));
    }
    Ok(
        FiniteGroup::from_generators(0usize, &[1 % n], |a, b| (a + b) % n)?
            .with_name(format!("cyclic({n})")),
    )
}

/// Dihedral group of order `2n`: pairs `(k, s)` meaning `r^k s^s`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::BadParameter("dihedral(n) needs n ≥ 2".into()));
    }
    let mul = move |a: &(usize, u8), b: &(usize, u8)| {
        let k = if a.1 == 0 { a.0 + b.0 } else { a.0 + n - b.0 };
        (k % n, a.1 ^ b.1)
    };
    Ok(
        FiniteGroup::from_generators((0, 0), &[(1, 0), (0, 1)], mul)?
            .with_name(format!("dihedral({n})")),
    )
}

/// `Z2 ⋉ Z/n` with the nontrivial element acting by inversion: pairs
/// `(s, k)` meaning `t^s r^k`.
pub fn z2_semidirect_zn(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::BadParameter(
            "Z2_semidirect_Zn(n) needs n ≥ 2".into(),
        ));
    }
    // (s, k)(s', k') = (s + s', (−1)^{s'} k + k')
    let mul = move |a: &(u8, usize), b: &(u8, usize)| {
        let k = if b.0 == 0 { a.1 } else { (n - a.1) % n };
        (a.0 ^ b.0, (k + b.1) % n)
    };
    Ok(
        FiniteGroup::from_generators((0, 0), &[(1, 0), (0, 1)], mul)?
            .with_name(format!("Z2_semidirect_Zn({n})")),
    )
}

/// Symmetric group on three letters, as permutations composed right to
/// left.
pub fn s3() -> FiniteGroup {
    let mul = |a: &[u8; 3], b: &[u8; 3]| [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]];
    FiniteGroup::from_generators([0u8, 1, 2], &[[1, 0, 2], [1, 2, 0]], mul)
        .expect("S3 is a group")
        .with_name("S3")
}

/// Heisenberg group mod `p`: triples `(a, b, c)` for
/// `[[1, a, c], [0, 1, b], [0, 0, 1]]`.
pub fn heisenberg_mod(p: usize) -> Result<FiniteGroup> {
    require_prime(p)?;
    let mul = move |x: &(usize, usize, usize), y: &(usize, usize, usize)| {
        (
            (x.0 + y.0) % p,
            (x.1 + y.1) % p,
            (x.2 + y.2 + x.0 * y.1) % p,
        )
    };
    Ok(
        FiniteGroup::from_generators((0, 0, 0), &[(1, 0, 0), (0, 1, 0)], mul)?
            .with_name(format!("heisenberg_mod({p})")),
    )
}

fn primitive_root(p: usize) -> usize {
    (1..p)
        .find(|&g| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .expect("prime modulus")
}

/// Row-major `n × n` matrix mod `p`.
pub type ModMatrix = Vec<usize>;

pub fn mod_mat_mul(n: usize, p: usize, a: &ModMatrix, b: &ModMatrix) -> ModMatrix {
    (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            (0..n).map(|k| a[i * n + k] * b[k * n + j]).sum::<usize>() % p
        })
        .collect()
}

/// Generators of the invertible upper triangular matrices mod `p`: a
/// primitive root on each diagonal slot, and `I + E_{i,i+1}`.
pub fn upper_triangular_generators(p: usize, n: usize) -> Vec<ModMatrix> {
    let identity: ModMatrix = (0..n * n).map(|ij| usize::from(ij / n == ij % n)).collect();
    let g = primitive_root(p);
    let mut gens = Vec::new();
    if g != 1 {
        for i in 0..n {
            let mut d = identity.clone();
            d[i * n + i] = g;
            gens.push(d);
        }
    }
    for i in 0..n - 1 {
        let mut u = identity.clone();
        u[i * n + i + 1] = 1;
        gens.push(u);
    }
    gens
}

/// Invertible upper triangular `n × n` matrices mod `p`, `n ∈ {2, 3}`.
pub fn upper_triangular_mod(p: usize, n: usize) -> Result<FiniteGroup> {
    require_prime(p)?;
    if !(2..=3).contains(&n) {
        return Err(Error::BadParameter(format!(
            "upper_triangular_mod needs n in 2..=3, got {n}"
        )));
    }
    let identity: ModMatrix = (0..n * n).map(|ij| usize::from(ij / n == ij % n)).collect();
    let gens = upper_triangular_generators(p, n);
    Ok(
        FiniteGroup::from_generators(identity, &gens, move |a, b| mod_mat_mul(n, p, a, b))?
            .with_name(format!("upper_triangular_mod({p},{n})")),
    )
}

/// Builtin names accepted by [`builtin_finite`], with their parameter
/// counts.
pub const BUILTIN_NAMES: &[(&str, usize)] = &[
    ("cyclic", 1),
    ("dihedral", 1),
    ("S3", 0),
    ("heisenberg_mod", 1),
    ("upper_triangular_mod", 2),
    ("Z2_semidirect_Zn", 1),
];

pub fn builtin_finite(name: &str, params: &[usize]) -> Result<FiniteGroup> {
    let arity = BUILTIN_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, a)| a)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    if params.len() != arity {
        return Err(Error::BadParameter(format!(
            "{name} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    match name {
        "cyclic" => cyclic(params[0]),
        "dihedral" => dihedral(params[0]),
        "S3" => Ok(s3()),
        "heisenberg_mod" => heisenberg_mod(params[0]),
        "upper_triangular_mod" => upper_triangular_mod(params[0], params[1]),
        "Z2_semidirect_Zn" => z2_semidirect_zn(params[0]),
        _ => unreachable!("name checked above"),
    }
}

/// Parses `cyclic(4)`, `upper_triangular_mod(3,2)` or `S3`.
pub fn parse_builtin(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    let (name, params) = match spec.split_once('(') {
        Some((name, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(|| {
                Error::BadParameter(format!("unbalanced parentheses in `{spec}`"))
            })?;
            let params = inner
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::BadParameter(format!("non-numeric parameter in `{spec}`")))?;
            (name.trim(), params)
        }
        None => (spec, Vec::new()),
    };
    builtin_finite(name, &params)
}

/// Builtin groups of order at most `max_order`, for exhaustive sweeps.
pub fn small_builtins(max_order: usize) -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(cyclic(n).expect("n ≥ 1"));
    }
    for n in 2..=max_order / 2 {
        out.push(dihedral(n).expect("n ≥ 2"));
        out.push(z2_semidirect_zn(n).expect("n ≥ 2"));
    }
    out.push(s3());
    for p in (2..)
        .filter(|&p| is_prime(p))
        .take_while(|&p| p * p * p <= max_order)
    {
        out.push(heisenberg_mod(p).expect("prime"));
    }
    for p in (2..)
        .filter(|&p| is_prime(p))
        .take_while(|&p| p <= max_order)
    {
        for n in 2..=3 {
            let order = (p - 1).pow(n as u32) * p.pow((n * (n - 1) / 2) as u32);
            if order <= max_order {
                out.push(upper_triangular_mod(p, n).expect("prime, n in range"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(cyclic(4).unwrap().order(), 4);
        assert_eq!(dihedral(5).unwrap().order(), 10);
        assert_eq!(z2_semidirect_zn(5).unwrap().order(), 10);
        assert_eq!(s3().order(), 6);
        assert!(!s3().is_abelian());
        let h = heisenberg_mod(3).unwrap();
        assert_eq!((h.order(), h.center().len()), (27, 3));
        assert_eq!(upper_triangular_mod(3, 2).unwrap().order(), 12);
        assert_eq!(upper_triangular_mod(2, 3).unwrap().order(), 8);
        assert_eq!(upper_triangular_mod(3, 3).unwrap().order(), 216);
    }

    #[test]
    fn parameters() {
        assert!(matches!(heisenberg_mod(4), Err(Error::BadParameter(_))));
        assert!(matches!(
            upper_triangular_mod(3, 4),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(cyclic(0), Err(Error::BadParameter(_))));
        assert!(matches!(
            parse_builtin("nope(3)"),
            Err(Error::UnknownEntry(_))
        ));
        assert!(matches!(
            parse_builtin("cyclic(3,4)"),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            parse_builtin("cyclic(x)"),
            Err(Error::BadParameter(_))
        ));
        assert_eq!(
            parse_builtin("upper_triangular_mod(3, 2)").unwrap().order(),
            12
        );
        assert_eq!(parse_builtin("S3").unwrap().order(), 6);
    }

    #[test]
    fn dihedral_matches_semidirect_product() {
        // Both are nonabelian of order 2n with a cyclic subgroup of index 2.
        for n in 3..=6 {
            let d = dihedral(n).unwrap();
            let s = z2_semidirect_zn(n).unwrap();
            let orders = |g: &FiniteGroup| {
                let mut v: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
                v.sort();
                v
            };
            assert_eq!(orders(&d), orders(&s));
            assert_eq!(d.center().len(), if n % 2 == 0 { 2 } else { 1 });
        }
    }
}
