//! Built-in families of small p-groups.
//!
//! Descriptors use the syntax `Family(arg, ...)`, e.g. `Quaternion(16)`,
//! `AbelianProduct(4,2,2)`, `Extraspecial(3,+)` or
//! `DirectProduct(Dihedral(8),Cyclic(2,1))`. The short aliases `C<n>`,
//! `D<n>`, `Q<n>` and `SD<n>` are also accepted.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::table::prime_of_power;
use super::{GroupError, GroupTable};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `C_{p^n}`
    Cyclic {
        p: usize,
        n: u32,
    },
    /// `(C_p)^n`
    ElemAbelian {
        p: usize,
        n: u32,
    },
    /// `C_{d_1} × … × C_{d_k}`
    AbelianProduct(Vec<usize>),
    /// dihedral group of the given order
    Dihedral(usize),
    /// generalized quaternion group of the given order
    Quaternion(usize),
    /// semidihedral group of the given order
    Semidihedral(usize),
    /// `M_{p^n} = ⟨a, b | a^{p^{n-1}}, b^p, bab⁻¹ = a^{1+p^{n-2}}⟩`
    Modular {
        p: usize,
        n: u32,
    },
    /// extraspecial group of order `p³`
    Extraspecial {
        p: usize,
        sign: Sign,
    },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    /// Order of the described group, validating the parameters.
    pub fn order(&self) -> Result<usize, GroupError> {
        let bad = |msg: String| Err(GroupError::InvalidSpec(msg));
        Ok(match self {
            GroupSpec::Cyclic { p, n }
            | GroupSpec::ElemAbelian { p, n }
            | GroupSpec::Modular { p, n } => {
                if prime_of_power(*p) != Some(*p) {
                    return bad(format!("{p} is not prime"));
                }
                if let GroupSpec::Modular { .. } = self {
                    let min = if *p == 2 { 4 } else { 3 };
                    if *n < min {
                        return bad(format!("Modular({p},{n}) needs n ≥ {min}"));
                    }
                }
                checked_pow(*p, *n)?
            }
            GroupSpec::AbelianProduct(ds) => {
                if ds.contains(&0) {
                    return bad("cyclic factor of order 0".into());
                }
                ds.iter()
                    .try_fold(1usize, |acc, &d| acc.checked_mul(d))
                    .ok_or_else(|| GroupError::InvalidSpec("order overflow".into()))?
            }
            GroupSpec::Dihedral(m) => {
                if *m < 4 || m % 2 != 0 {
                    return bad(format!("Dihedral({m}) needs an even order ≥ 4"));
                }
                *m
            }
            GroupSpec::Quaternion(m) => {
                if *m < 8 || !m.is_power_of_two() {
                    return bad(format!("Quaternion({m}) needs a power of two ≥ 8"));
                }
                *m
            }
            GroupSpec::Semidihedral(m) => {
                if *m < 16 || !m.is_power_of_two() {
                    return bad(format!("Semidihedral({m}) needs a power of two ≥ 16"));
                }
                *m
            }
            GroupSpec::Extraspecial { p, .. } => {
                if prime_of_power(*p) != Some(*p) {
                    return bad(format!("{p} is not prime"));
                }
                p * p * p
            }
            GroupSpec::DirectProduct(a, b) => a
                .order()?
                .checked_mul(b.order()?)
                .ok_or_else(|| GroupError::InvalidSpec("order overflow".into()))?,
        })
    }

    /// Conventional short name, e.g. `C8`, `C4xC2`, `Q16`, `3^(1+2)+`.
    pub fn short_name(&self) -> String {
        match self {
            GroupSpec::Cyclic { p, n } => format!("C{}", p.pow(*n)),
            GroupSpec::ElemAbelian { p, n } => format!("C{p}^{n}"),
            GroupSpec::AbelianProduct(ds) if ds.is_empty() => "C1".into(),
            GroupSpec::AbelianProduct(ds) => ds
                .iter()
                .map(|d| format!("C{d}"))
                .collect::<Vec<_>>()
                .join("x"),
            GroupSpec::Dihedral(m) => format!("D{m}"),
            GroupSpec::Quaternion(m) => format!("Q{m}"),
            GroupSpec::Semidihedral(m) => format!("SD{m}"),
            GroupSpec::Modular { p, n } => format!("M{}", p.pow(*n)),
            GroupSpec::Extraspecial { p, sign } => {
                format!("{p}^(1+2){}", if *sign == Sign::Plus { '+' } else { '-' })
            }
            GroupSpec::DirectProduct(a, b) => {
                let wrap = |s: &GroupSpec| match s {
                    GroupSpec::DirectProduct(..) => format!("({})", s.short_name()),
                    _ => s.short_name(),
                };
                format!("{}x{}", wrap(a), wrap(b))
            }
        }
    }
}

fn checked_pow(p: usize, n: u32) -> Result<usize, GroupError> {
    p.checked_pow(n)
        .ok_or_else(|| GroupError::InvalidSpec("order overflow".into()))
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { p, n } => write!(f, "Cyclic({p},{n})"),
            GroupSpec::ElemAbelian { p, n } => write!(f, "ElemAbelian({p},{n})"),
            GroupSpec::AbelianProduct(ds) => {
                let ds: Vec<String> = ds.iter().map(ToString::to_string).collect();
                write!(f, "AbelianProduct({})", ds.join(","))
            }
            GroupSpec::Dihedral(m) => write!(f, "Dihedral({m})"),
            GroupSpec::Quaternion(m) => write!(f, "Quaternion({m})"),
            GroupSpec::Semidihedral(m) => write!(f, "Semidihedral({m})"),
            GroupSpec::Modular { p, n } => write!(f, "Modular({p},{n})"),
            GroupSpec::Extraspecial { p, sign } => {
                write!(
                    f,
                    "Extraspecial({p},{})",
                    if *sign == Sign::Plus { '+' } else { '-' }
                )
            }
            GroupSpec::DirectProduct(a, b) => write!(f, "DirectProduct({a},{b})"),
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

enum Arg {
    Int(usize),
    Sign(Sign),
    Spec(GroupSpec),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, GroupError> {
        Err(GroupError::InvalidSpec(format!(
            "{msg} at offset {} in `{}`",
            self.pos, self.src
        )))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn spec(&mut self) -> Result<GroupSpec, GroupError> {
        let word = self.word();
        if word.is_empty() {
            return self.err("expected a group family");
        }
        if !self.eat('(') {
            return alias(word);
        }
        let mut args = Vec::new();
        if !self.eat(')') {
            loop {
                args.push(self.arg()?);
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return self.err("expected `,` or `)`");
                }
            }
        }
        build_spec(word, args)
    }

    fn arg(&mut self) -> Result<Arg, GroupError> {
        if self.eat('+') {
            return Ok(Arg::Sign(Sign::Plus));
        }
        if self.eat('-') {
            return Ok(Arg::Sign(Sign::Minus));
        }
        self.skip_ws();
        if self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            let w = self.word();
            return w
                .parse()
                .map(Arg::Int)
                .or_else(|_| self.err(&format!("bad integer `{w}`")));
        }
        self.spec().map(Arg::Spec)
    }
}

fn alias(word: &str) -> Result<GroupSpec, GroupError> {
    let upper = word.to_ascii_uppercase();
    let (prefix, digits) = upper.split_at(
        upper
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(upper.len()),
    );
    let m: usize = digits
        .parse()
        .map_err(|_| GroupError::UnknownFamily(word.to_string()))?;
    let spec = match prefix {
        "C" => {
            let p = prime_of_power(m)
                .ok_or_else(|| GroupError::InvalidSpec(format!("C{m}: not a prime power")))?;
            GroupSpec::Cyclic { p, n: m.ilog(p) }
        }
        "D" => GroupSpec::Dihedral(m),
        "Q" => GroupSpec::Quaternion(m),
        "SD" => GroupSpec::Semidihedral(m),
        _ => return Err(GroupError::UnknownFamily(word.to_string())),
    };
    spec.order()?;
    Ok(spec)
}

fn build_spec(family: &str, args: Vec<Arg>) -> Result<GroupSpec, GroupError> {
    let ints = |args: &[Arg]| -> Option<Vec<usize>> {
        args.iter()
            .map(|a| match a {
                Arg::Int(k) => Some(*k),
                _ => None,
            })
            .collect()
    };
    let bad = || GroupError::InvalidSpec(format!("bad arguments for {family}"));
    let pn = |args: &[Arg]| -> Result<(usize, u32), GroupError> {
        match ints(args).as_deref() {
            Some(&[p, n]) => Ok((p, u32::try_from(n).map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    };
    let one = |args: &[Arg]| -> Result<usize, GroupError> {
        match ints(args).as_deref() {
            Some(&[m]) => Ok(m),
            _ => Err(bad()),
        }
    };
    let spec = match family.to_ascii_lowercase().as_str() {
        "cyclic" => {
            let (p, n) = pn(&args)?;
            GroupSpec::Cyclic { p, n }
        }
        "elemabelian" => {
            let (p, n) = pn(&args)?;
            GroupSpec::ElemAbelian { p, n }
        }
        "modular" => {
            let (p, n) = pn(&args)?;
            GroupSpec::Modular { p, n }
        }
        "abelianproduct" => GroupSpec::AbelianProduct(ints(&args).ok_or_else(bad)?),
        "dihedral" => GroupSpec::Dihedral(one(&args)?),
        "quaternion" => GroupSpec::Quaternion(one(&args)?),
        "semidihedral" => GroupSpec::Semidihedral(one(&args)?),
        "extraspecial" => match args.as_slice() {
            [Arg::Int(p), Arg::Sign(sign)] => GroupSpec::Extraspecial { p: *p, sign: *sign },
            _ => return Err(bad()),
        },
        "directproduct" => {
            let mut specs: Vec<GroupSpec> = args
                .into_iter()
                .map(|a| match a {
                    Arg::Spec(s) => Ok(s),
                    _ => Err(bad()),
                })
                .collect::<Result<_, _>>()?;
            if specs.len() < 2 {
                return Err(bad());
            }
            // left-nested for three or more factors
            let first = specs.remove(0);
            specs.into_iter().fold(first, |acc, s| {
                GroupSpec::DirectProduct(Box::new(acc), Box::new(s))
            })
        }
        _ => return Err(GroupError::UnknownFamily(family.to_string())),
    };
    spec.order()?;
    Ok(spec)
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return p.err("trailing input");
        }
        Ok(spec)
    }
}

/// Builds the group described by `spec`, refusing orders above the cap.
pub fn builtin(spec: &GroupSpec, limits: &Limits) -> Result<GroupTable, GroupError> {
    let order = spec.order()?;
    if order > limits.order_cap {
        return Err(GroupError::OrderCapExceeded {
            order,
            cap: limits.order_cap,
        });
    }
    let name = spec.short_name();
    match spec {
        GroupSpec::Cyclic { p, n } => abelian(&[p.pow(*n)], name),
        GroupSpec::ElemAbelian { p, n } => abelian(&vec![*p; *n as usize], name),
        GroupSpec::AbelianProduct(ds) => abelian(ds, name),
        GroupSpec::Dihedral(m) => {
            let h = m / 2;
            metacyclic(h, 2, 0, h - 1, name)
        }
        GroupSpec::Quaternion(m) => {
            let h = m / 2;
            metacyclic(h, 2, h / 2, h - 1, name)
        }
        GroupSpec::Semidihedral(m) => {
            let h = m / 2;
            metacyclic(h, 2, 0, h / 2 - 1, name)
        }
        GroupSpec::Modular { p, n } => {
            let h = p.pow(n - 1);
            metacyclic(h, *p, 0, 1 + p.pow(n - 2), name)
        }
        GroupSpec::Extraspecial {
            p: 2,
            sign: Sign::Plus,
        } => metacyclic(4, 2, 0, 3, name),
        GroupSpec::Extraspecial {
            p: 2,
            sign: Sign::Minus,
        } => metacyclic(4, 2, 2, 3, name),
        GroupSpec::Extraspecial {
            p,
            sign: Sign::Minus,
        } => metacyclic(p * p, *p, 0, 1 + p, name),
        GroupSpec::Extraspecial {
            p,
            sign: Sign::Plus,
        } => heisenberg(*p, name),
        GroupSpec::DirectProduct(a, b) => {
            let ga = builtin(a, limits)?;
            let gb = builtin(b, limits)?;
            direct_product(&ga, &gb, name)
        }
    }
}

/// `C_{d_1} × … × C_{d_k}` with mixed-radix element encoding.
fn abelian(ds: &[usize], name: String) -> Result<GroupTable, GroupError> {
    let n: usize = ds.iter().product();
    let digits = |mut x: usize| -> Vec<usize> {
        ds.iter()
            .map(|&d| {
                let r = x % d;
                x /= d;
                r
            })
            .collect()
    };
    GroupTable::synthesize(n, name, |g, h| {
        let (a, b) = (digits(g), digits(h));
        ds.iter()
            .zip(a.iter().zip(&b))
            .rev()
            .fold(0, |acc, (&d, (&x, &y))| acc * d + (x + y) % d)
    })
}

/// `⟨a, b | a^m, b^s = a^t, bab⁻¹ = a^r⟩`, elements `a^i b^j` encoded as
/// `i + m·j`. Requires `r^s ≡ 1` and `rt ≡ t (mod m)`.
fn metacyclic(
    m: usize,
    s: usize,
    t: usize,
    r: usize,
    name: String,
) -> Result<GroupTable, GroupError> {
    let r_pow: Vec<usize> = (0..s)
        .scan(1usize, |acc, _| {
            let cur = *acc;
            *acc = *acc * r % m;
            Some(cur)
        })
        .collect();
    GroupTable::synthesize(m * s, name, |g, h| {
        let (i, j) = (g % m, g / m);
        let (k, l) = (h % m, h / m);
        // a^i b^j a^k b^l = a^{i + k r^j} b^{j+l}
        let mut e = i + k * r_pow[j];
        let mut f = j + l;
        if f >= s {
            f -= s;
            e += t;
        }
        e % m + m * f
    })
}

/// Heisenberg group mod p: `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
fn heisenberg(p: usize, name: String) -> Result<GroupTable, GroupError> {
    let split = |x: usize| (x % p, (x / p) % p, x / (p * p));
    GroupTable::synthesize(p * p * p, name, |g, h| {
        let (a, b, c) = split(g);
        let (a2, b2, c2) = split(h);
        (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
    })
}

fn direct_product(a: &GroupTable, b: &GroupTable, name: String) -> Result<GroupTable, GroupError> {
    let nb = b.order();
    GroupTable::synthesize(a.order() * nb, name, |g, h| {
        a.mul(g / nb, h / nb) * nb + b.mul(g % nb, h % nb)
    })
}

/// One family in the catalog printed by the `groups` command.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyInfo {
    pub family: &'static str,
    pub syntax: &'static str,
    pub parameters: &'static str,
    pub example: &'static str,
}

pub fn family_catalog() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo {
            family: "Cyclic",
            syntax: "Cyclic(p,n)",
            parameters: "p prime, n ≥ 0; order p^n",
            example: "Cyclic(2,3)",
        },
        FamilyInfo {
            family: "ElemAbelian",
            syntax: "ElemAbelian(p,n)",
            parameters: "p prime, n ≥ 0; order p^n",
            example: "ElemAbelian(2,3)",
        },
        FamilyInfo {
            family: "AbelianProduct",
            syntax: "AbelianProduct(d1,...,dk)",
            parameters: "cyclic factor orders d_i ≥ 1",
            example: "AbelianProduct(4,2)",
        },
        FamilyInfo {
            family: "Dihedral",
            syntax: "Dihedral(m)",
            parameters: "order m, even, m ≥ 4",
            example: "Dihedral(8)",
        },
        FamilyInfo {
            family: "Quaternion",
            syntax: "Quaternion(m)",
            parameters: "order m = 2^n, m ≥ 8",
            example: "Quaternion(8)",
        },
        FamilyInfo {
            family: "Semidihedral",
            syntax: "Semidihedral(m)",
            parameters: "order m = 2^n, m ≥ 16",
            example: "Semidihedral(16)",
        },
        FamilyInfo {
            family: "Modular",
            syntax: "Modular(p,n)",
            parameters: "p prime, n ≥ 3 (n ≥ 4 for p = 2); order p^n",
            example: "Modular(2,4)",
        },
        FamilyInfo {
            family: "Extraspecial",
            syntax: "Extraspecial(p,±)",
            parameters: "p prime, sign + or -; order p^3",
            example: "Extraspecial(3,+)",
        },
        FamilyInfo {
            family: "DirectProduct",
            syntax: "DirectProduct(spec,spec)",
            parameters: "any two descriptors; order is the product",
            example: "DirectProduct(Dihedral(8),Cyclic(2,1))",
        },
    ]
}

/// Built-in p-groups of order at most `max_order` (and greater than 1) for
/// the prime `p`, without duplicate isomorphism types among the families.
pub fn catalog(p: usize, max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    if prime_of_power(p) != Some(p) {
        return out;
    }
    let max_n = (1..)
        .take_while(|&n| p.checked_pow(n).is_some_and(|o| o <= max_order))
        .last()
        .unwrap_or(0);
    let cyc = |n: u32| GroupSpec::Cyclic { p, n };

    for n in 1..=max_n {
        out.push(cyc(n));
    }
    for n in 2..=max_n {
        out.push(GroupSpec::ElemAbelian { p, n });
    }
    // remaining abelian types: partitions of n with at least two parts that
    // are not all ones
    for n in 3..=max_n {
        for part in partitions(n as usize, n as usize) {
            if part.len() >= 2 && part[0] > 1 {
                out.push(GroupSpec::AbelianProduct(
                    part.iter().map(|&k| p.pow(k as u32)).collect(),
                ));
            }
        }
    }
    if p == 2 {
        for n in 3..=max_n {
            out.push(GroupSpec::Dihedral(1 << n));
            out.push(GroupSpec::Quaternion(1 << n));
        }
        for n in 4..=max_n {
            out.push(GroupSpec::Semidihedral(1 << n));
            out.push(GroupSpec::Modular { p, n });
        }
        let dp = |a: GroupSpec, b: GroupSpec| GroupSpec::DirectProduct(Box::new(a), Box::new(b));
        let products = [
            dp(GroupSpec::Dihedral(8), cyc(1)),
            dp(GroupSpec::Quaternion(8), cyc(1)),
            dp(GroupSpec::Dihedral(8), cyc(2)),
            dp(GroupSpec::Quaternion(8), cyc(2)),
            dp(
                GroupSpec::Dihedral(8),
                GroupSpec::ElemAbelian { p: 2, n: 2 },
            ),
            dp(
                GroupSpec::Quaternion(8),
                GroupSpec::ElemAbelian { p: 2, n: 2 },
            ),
            dp(GroupSpec::Dihedral(16), cyc(1)),
            dp(GroupSpec::Quaternion(16), cyc(1)),
            dp(GroupSpec::Semidihedral(16), cyc(1)),
            dp(GroupSpec::Modular { p: 2, n: 4 }, cyc(1)),
            dp(GroupSpec::Dihedral(8), GroupSpec::Dihedral(8)),
            dp(GroupSpec::Quaternion(8), GroupSpec::Quaternion(8)),
            dp(GroupSpec::Dihedral(8), GroupSpec::Quaternion(8)),
        ];
        out.extend(
            products
                .into_iter()
                .filter(|s| s.order().is_ok_and(|o| o <= max_order)),
        );
    } else {
        if max_n >= 3 {
            out.push(GroupSpec::Extraspecial {
                p,
                sign: Sign::Plus,
            });
            out.push(GroupSpec::Extraspecial {
                p,
                sign: Sign::Minus,
            });
        }
        for n in 4..=max_n {
            out.push(GroupSpec::Modular { p, n });
        }
        if max_n >= 4 {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(GroupSpec::DirectProduct(
                    Box::new(GroupSpec::Extraspecial { p, sign }),
                    Box::new(cyc(1)),
                ));
            }
        }
    }
    out
}

/// Partitions of `n` into parts of size at most `max`, parts non-increasing.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> GroupTable {
        builtin(&s.parse().unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn basic_families() {
        let c8 = build("Cyclic(2,3)");
        assert_eq!((c8.order(), c8.exponent()), (8, 8));
        let q8 = build("Quaternion(8)");
        assert_eq!(q8.order(), 8);
        // brute force: number of involutions
        assert_eq!((0..8).filter(|&x| q8.elem_order(x) == 2).count(), 1);
        let he = build("Extraspecial(3,+)");
        assert_eq!((he.order(), he.exponent()), (27, 3));
        assert!(!he.is_abelian());
        let m27 = build("Extraspecial(3,-)");
        assert_eq!((m27.order(), m27.exponent()), (27, 9));
        assert!(!m27.is_abelian());
    }

    #[test]
    fn two_group_families() {
        let d16 = build("Dihedral(16)");
        assert_eq!((0..16).filter(|&x| d16.elem_order(x) == 2).count(), 9);
        let q16 = build("Quaternion(16)");
        assert_eq!((0..16).filter(|&x| q16.elem_order(x) == 2).count(), 1);
        let sd16 = build("Semidihedral(16)");
        assert_eq!((0..16).filter(|&x| sd16.elem_order(x) == 2).count(), 5);
        let m16 = build("Modular(2,4)");
        assert_eq!((0..16).filter(|&x| m16.elem_order(x) == 2).count(), 3);
        assert_eq!(m16.exponent(), 8);
        assert!(!m16.is_abelian());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "Cyclic(2,3)",
            "ElemAbelian(3,2)",
            "AbelianProduct(4,2,2)",
            "Dihedral(8)",
            "Quaternion(16)",
            "Semidihedral(32)",
            "Modular(3,4)",
            "Extraspecial(5,-)",
            "DirectProduct(Dihedral(8),Cyclic(2,1))",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("q8".parse::<GroupSpec>().unwrap(), GroupSpec::Quaternion(8));
        assert_eq!(
            "C27".parse::<GroupSpec>().unwrap(),
            GroupSpec::Cyclic { p: 3, n: 3 }
        );
        assert_eq!(
            " directproduct( D8 , C2 ) "
                .parse::<GroupSpec>()
                .unwrap()
                .short_name(),
            "D8xC2"
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "Frob(20)".parse::<GroupSpec>(),
            Err(GroupError::UnknownFamily(_))
        ));
        assert!(matches!(
            "Quaternion(12)".parse::<GroupSpec>(),
            Err(GroupError::InvalidSpec(_))
        ));
        assert!(matches!(
            "Cyclic(4,2)".parse::<GroupSpec>(),
            Err(GroupError::InvalidSpec(_))
        ));
        assert!("Cyclic(2,3".parse::<GroupSpec>().is_err());
        assert!("Cyclic(2,3) x".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn order_cap() {
        let spec: GroupSpec = "Cyclic(2,8)".parse().unwrap();
        assert_eq!(
            builtin(&spec, &Limits::default()).unwrap_err(),
            GroupError::OrderCapExceeded {
                order: 256,
                cap: 128
            }
        );
    }

    #[test]
    fn catalog_entries_build() {
        for (p, max) in [(2, 64), (3, 81), (5, 25)] {
            let specs = catalog(p, max);
            let names: std::collections::HashSet<String> =
                specs.iter().map(GroupSpec::short_name).collect();
            assert_eq!(names.len(), specs.len(), "duplicate names for p={p}");
            for s in specs {
                let g = build(&s.to_string());
                assert!(g.order() <= max && g.is_p_group(p), "{s}");
            }
        }
        assert_eq!(catalog(5, 25).len(), 3);
    }

    #[test]
    fn family_examples_build() {
        for f in family_catalog() {
            let spec: GroupSpec = f.example.parse().unwrap();
            assert!(spec.to_string().starts_with(f.family));
            build(f.example);
        }
    }
}
