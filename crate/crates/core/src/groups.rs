//! The Kleinian groups of the catalog, built as explicit matrix groups over
//! `Q(ζ_120)`, together with their one-dimensional characters and the double
//! covers `Γ(ρ) = {(γ, w) : w² = ρ(γ)}`.
//!
//! Character values are roots of unity, stored as exponents of `ζ_120`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::cyclo::{zeta, CMat2, Cyclo, N};
use crate::error::{Error, Result};
use crate::exact::rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    /// Cyclic group of order `n`.
    Cyclic(u32),
    /// Quaternionic (binary dihedral) group, tagged by its order `4n`.
    Quaternionic(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GroupId {
    pub const CATALOG: [GroupId; 10] = [
        GroupId::Cyclic(2),
        GroupId::Cyclic(4),
        GroupId::Cyclic(6),
        GroupId::Cyclic(10),
        GroupId::Quaternionic(8),
        GroupId::Quaternionic(12),
        GroupId::Quaternionic(24),
        GroupId::BinaryTetrahedral,
        GroupId::BinaryOctahedral,
        GroupId::BinaryIcosahedral,
    ];

    pub fn order(self) -> usize {
        match self {
            GroupId::Cyclic(n) | GroupId::Quaternionic(n) => n as usize,
            GroupId::BinaryTetrahedral => 24,
            GroupId::BinaryOctahedral => 48,
            GroupId::BinaryIcosahedral => 120,
        }
    }

    /// `(p, q, r)` of the presentation `S^p = T^q = U^r = STU`, for the
    /// non-abelian groups.
    pub fn presentation(self) -> Option<(u32, u32, u32)> {
        match self {
            GroupId::Cyclic(_) => None,
            GroupId::Quaternionic(m) => Some((m / 4, 2, 2)),
            GroupId::BinaryTetrahedral => Some((3, 3, 2)),
            GroupId::BinaryOctahedral => Some((4, 3, 2)),
            GroupId::BinaryIcosahedral => Some((5, 3, 2)),
        }
    }

    /// The order predicted by the presentation, `4/(1/p + 1/q + 1/r - 1)`.
    pub fn presentation_order(self) -> Option<usize> {
        self.presentation().map(|(p, q, r)| {
            let (p, q, r) = (p as i64, q as i64, r as i64);
            let x = rat::frac(q * r + p * r + p * q - p * q * r, p * q * r);
            let o = rat::int(4) / x;
            rat::to_i64(&o).expect("finite presentation") as usize
        })
    }

    pub fn name(self) -> String {
        match self {
            GroupId::Cyclic(n) => format!("c{n}"),
            GroupId::Quaternionic(n) => format!("q{n}"),
            GroupId::BinaryTetrahedral => "t".into(),
            GroupId::BinaryOctahedral => "o".into(),
            GroupId::BinaryIcosahedral => "i".into(),
        }
    }

    fn slot(self) -> usize {
        Self::CATALOG
            .iter()
            .position(|&g| g == self)
            .expect("group in catalog")
    }

    fn valid(self) -> bool {
        Self::CATALOG.contains(&self)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for GroupId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        GroupId::CATALOG
            .iter()
            .copied()
            .find(|g| g.name() == t)
            .ok_or_else(|| {
                let names: Vec<String> = GroupId::CATALOG.iter().map(|g| g.name()).collect();
                Error::Parse(format!(
                    "unknown group '{s}' (expected one of {})",
                    names.join(" ")
                ))
            })
    }
}

/// A one-dimensional character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharId {
    Trivial,
    /// `χ^m` on a cyclic group, where `χ(T) = ε_n`.
    CyclicPower(u32),
    Chi0,
    ChiPlus,
    ChiMinus,
    /// The sign character of the binary octahedral group.
    OctChi,
}

impl CharId {
    pub fn name(self) -> String {
        match self {
            CharId::Trivial => "1".into(),
            CharId::CyclicPower(1) => "chi".into(),
            CharId::CyclicPower(m) => format!("chi^{m}"),
            CharId::Chi0 => "chi0".into(),
            CharId::ChiPlus => "chi+".into(),
            CharId::ChiMinus => "chi-".into(),
            CharId::OctChi => "chi".into(),
        }
    }

    /// Parse a character name in the context of a group, so that `chi`
    /// means `χ` on cyclic groups and the sign character on `O`.
    pub fn parse_for(s: &str, group: GroupId) -> Result<CharId> {
        let t = s.trim().to_ascii_lowercase();
        let bad = || {
            Error::Parse(format!(
                "unknown character '{s}' (expected one of 1 trivial chi chi^m chi0 chi+ chi-)"
            ))
        };
        let chi = match t.as_str() {
            "1" | "trivial" => CharId::Trivial,
            "chi0" => CharId::Chi0,
            "chi+" => CharId::ChiPlus,
            "chi-" => CharId::ChiMinus,
            "chi" if group == GroupId::BinaryOctahedral => CharId::OctChi,
            "chi" => CharId::CyclicPower(1),
            _ => match t.strip_prefix("chi^") {
                Some(m) => CharId::CyclicPower(m.parse().map_err(|_| bad())?),
                None => return Err(bad()),
            },
        };
        Ok(chi)
    }
}

impl fmt::Display for CharId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    S,
    T,
    U,
}

/// A matrix group together with the Cayley graph of its generators.
#[derive(Debug)]
pub struct GroupModel {
    pub id: GroupId,
    pub elements: Vec<CMat2>,
    /// Generators used for the closure, with their element indices.
    pub generators: Vec<(Gen, usize)>,
    /// Index of `S`, `T`, `U` in `elements` (absent `S`, `U` for cyclic groups).
    pub s: Option<usize>,
    pub t: usize,
    pub u: Option<usize>,
    /// `right_mul[i][k]` is the index of `elements[i] * generators[k]`.
    right_mul: Vec<Vec<usize>>,
    /// BFS tree: `(parent, generator slot)`, `None` for the identity.
    parent: Vec<Option<(usize, usize)>>,
}

/// Extended element `(γ, w)` of `Γ(ρ)`, with `w = ζ_120^w_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtElement {
    pub gamma: usize,
    pub w_exp: u32,
}

impl ExtElement {
    pub fn w(&self) -> Cyclo {
        Cyclo::root(self.w_exp as i64)
    }
}

fn sqrt2() -> Cyclo {
    let z = zeta(8).expect("8 | 120");
    &z - &z.pow(3).expect("power")
}

fn sqrt5() -> Cyclo {
    let z = zeta(5).expect("5 | 120");
    let s = &z + &z.pow(4).expect("power");
    &(&s + &s) + &Cyclo::one()
}

fn eps(n: u32, k: i64) -> Cyclo {
    zeta(n).expect("n | 120").pow(k).expect("root of unity")
}

/// `U = [[0, 1], [-1, 0]]`.
pub fn u_matrix() -> CMat2 {
    CMat2::new(
        Cyclo::zero(),
        Cyclo::one(),
        Cyclo::from_int(-1),
        Cyclo::zero(),
    )
}

/// The generator `S` of a non-abelian group, or `T` of a cyclic one.
///
/// For `T`, `O` and `I` these are the transposes of the classical table
/// matrices; with the fixed `U` only the transposes satisfy `STU = -I`
/// together with `S^p = T^q = U^r`.
pub fn primary_generator(id: GroupId) -> CMat2 {
    match id {
        GroupId::Cyclic(n) => CMat2::diag(eps(n, 1), eps(n, -1)),
        GroupId::Quaternionic(m) => {
            let n2 = m / 2;
            CMat2::diag(eps(n2, 1), eps(n2, -1))
        }
        GroupId::BinaryTetrahedral => {
            let c = sqrt2().inv().expect("nonzero");
            CMat2::new(eps(8, -1), eps(8, 1), eps(8, 3), eps(8, 1)).scale(&c)
        }
        GroupId::BinaryOctahedral => {
            let c = -&sqrt2().inv().expect("nonzero");
            CMat2::new(Cyclo::one(), eps(8, 3), eps(8, 1), Cyclo::one()).scale(&c)
        }
        GroupId::BinaryIcosahedral => {
            let c = sqrt5().inv().expect("nonzero");
            let e = |k| eps(5, k);
            CMat2::new(
                &e(4) - &Cyclo::one(),
                &e(4) - &e(2),
                &e(3) - &e(1),
                &e(1) - &Cyclo::one(),
            )
            .scale(&c)
        }
    }
}

impl GroupModel {
    pub fn build(id: GroupId) -> Result<GroupModel> {
        if !id.valid() {
            return Err(Error::Consistency(format!("{id:?} is not in the catalog")));
        }
        let expected = id.order();
        let (gens, names) = match id {
            GroupId::Cyclic(_) => (vec![primary_generator(id)], vec![Gen::T]),
            _ => (
                vec![primary_generator(id), u_matrix()],
                vec![Gen::S, Gen::U],
            ),
        };
        for g in &gens {
            if !g.det().is_one() {
                return Err(Error::Consistency(format!(
                    "generator of {id} is not in SL(2)"
                )));
            }
        }

        let mut elements = vec![CMat2::identity()];
        let mut parent = vec![None];
        let mut right_mul: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            let mut row = Vec::with_capacity(gens.len());
            for (k, g) in gens.iter().enumerate() {
                let m = &elements[i] * g;
                let j = match elements.iter().position(|x| *x == m) {
                    Some(j) => j,
                    None => {
                        elements.push(m);
                        parent.push(Some((i, k)));
                        if elements.len() > expected {
                            return Err(Error::GroupClosure {
                                group: id.name(),
                                expected,
                                found: elements.len(),
                            });
                        }
                        elements.len() - 1
                    }
                };
                row.push(j);
            }
            right_mul.push(row);
            i += 1;
        }
        if elements.len() != expected {
            return Err(Error::GroupClosure {
                group: id.name(),
                expected,
                found: elements.len(),
            });
        }

        let index = |m: &CMat2| elements.iter().position(|x| x == m);
        let generators: Vec<(Gen, usize)> = names
            .iter()
            .zip(&gens)
            .map(|(&n, g)| (n, index(g).expect("generator in closure")))
            .collect();
        let (s, t, u) = match id {
            GroupId::Cyclic(_) => (None, generators[0].1, None),
            _ => {
                let s_m = &gens[0];
                let u_m = &gens[1];
                // STU = -I
                let t_m = &(&s_m.inverse_sl2() * &CMat2::minus_identity()) * &u_m.inverse_sl2();
                let t = index(&t_m).expect("T lies in the group");
                (Some(generators[0].1), t, Some(generators[1].1))
            }
        };
        let model = GroupModel {
            id,
            elements,
            generators,
            s,
            t,
            u,
            right_mul,
            parent,
        };
        model.check_presentation()?;
        Ok(model)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, m: &CMat2) -> Option<usize> {
        self.elements.iter().position(|x| x == m)
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn minus_identity_index(&self) -> Option<usize> {
        self.index_of(&CMat2::minus_identity())
    }

    pub fn generator(&self, g: Gen) -> Option<&CMat2> {
        let i = match g {
            Gen::S => self.s?,
            Gen::T => self.t,
            Gen::U => self.u?,
        };
        Some(&self.elements[i])
    }

    /// Check `S^p = T^q = U^r = STU = -I` for the non-abelian groups.
    pub fn check_presentation(&self) -> Result<()> {
        let Some((p, q, r)) = self.id.presentation() else {
            return Ok(());
        };
        let m1 = CMat2::minus_identity();
        let s = &self.elements[self.s.expect("non-abelian")];
        let t = &self.elements[self.t];
        let u = &self.elements[self.u.expect("non-abelian")];
        let fail = |relation: &str| Error::Presentation {
            group: self.id.name(),
            relation: relation.into(),
        };
        if s.pow(p) != m1 {
            return Err(fail(&format!("S^{p} = -I")));
        }
        if t.pow(q) != m1 {
            return Err(fail(&format!("T^{q} = -I")));
        }
        if u.pow(r) != m1 {
            return Err(fail(&format!("U^{r} = -I")));
        }
        if &(s * t) * u != m1 {
            return Err(fail("STU = -I"));
        }
        Ok(())
    }

    fn generator_exponents(&self, chi: CharId) -> Result<Vec<i64>> {
        let undefined = || Error::CharacterUndefined {
            group: self.id.name(),
            chi: chi.name(),
        };
        let n = N as i64;
        let exps = |s: i64, u: i64| -> Vec<i64> {
            self.generators
                .iter()
                .map(|(g, _)| match g {
                    Gen::S => s,
                    Gen::U => u,
                    Gen::T => unreachable!("T is derived"),
                })
                .collect()
        };
        let half = n / 2;
        let v = match (self.id, chi) {
            (_, CharId::Trivial) => vec![0; self.generators.len()],
            (GroupId::Cyclic(c), CharId::CyclicPower(m)) => {
                vec![(n / c as i64) * m as i64]
            }
            (GroupId::Quaternionic(q), c) => {
                let nn = (q / 4) as i64;
                let i_n = (n / 4) * nn;
                match c {
                    CharId::Chi0 => exps(0, half),
                    CharId::ChiPlus => exps(half, i_n + half),
                    CharId::ChiMinus => exps(half, i_n),
                    _ => return Err(undefined()),
                }
            }
            (GroupId::BinaryOctahedral, CharId::OctChi) => exps(half, half),
            _ => return Err(undefined()),
        };
        Ok(v.into_iter().map(|e| e.rem_euclid(n)).collect())
    }

    /// Exponents `e_g` with `χ(g) = ζ_120^{e_g}` for every element. Fails if
    /// the prescribed generator values do not define a homomorphism.
    pub fn char_exponents(&self, chi: CharId) -> Result<Vec<u32>> {
        let n = N as i64;
        let gen_exp = self.generator_exponents(chi)?;
        let mut out = vec![0i64; self.order()];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some((j, k)) = *p {
                out[i] = (out[j] + gen_exp[k]).rem_euclid(n);
            }
        }
        for (i, row) in self.right_mul.iter().enumerate() {
            for (k, &j) in row.iter().enumerate() {
                if (out[i] + gen_exp[k]).rem_euclid(n) != out[j] {
                    return Err(Error::Consistency(format!(
                        "{} is not a character of {}",
                        chi.name(),
                        self.id.name()
                    )));
                }
            }
        }
        Ok(out.into_iter().map(|e| e as u32).collect())
    }

    pub fn char_value(&self, chi: CharId, g: usize) -> Result<Cyclo> {
        Ok(Cyclo::root(self.char_exponents(chi)?[g] as i64))
    }

    /// `χ` is even if it is trivial on `-I` (vacuous when `-I ∉ Γ`).
    pub fn is_even(&self, chi: CharId) -> Result<bool> {
        let e = self.char_exponents(chi)?;
        Ok(self.minus_identity_index().is_none_or(|m| e[m] == 0))
    }

    /// The `2|Γ|` elements of `Γ(ρ)`.
    pub fn extended_elements(&self, rho: CharId) -> Result<Vec<ExtElement>> {
        if !self.is_even(rho)? {
            return Err(Error::Consistency(format!(
                "{} is not an even character of {}",
                rho.name(),
                self.id.name()
            )));
        }
        let exps = self.char_exponents(rho)?;
        let mut out = Vec::with_capacity(2 * self.order());
        for (gamma, &e) in exps.iter().enumerate() {
            if e % 2 != 0 {
                return Err(Error::ExtensionNotRepresentable);
            }
            let w = e / 2;
            out.push(ExtElement { gamma, w_exp: w });
            out.push(ExtElement {
                gamma,
                w_exp: (w + N / 2) % N,
            });
        }
        Ok(out)
    }
}

/// The cached model of a catalog group.
pub fn group(id: GroupId) -> Result<&'static GroupModel> {
    static CACHE: [OnceLock<GroupModel>; 10] = [const { OnceLock::new() }; 10];
    if !id.valid() {
        return Err(Error::Consistency(format!("{id:?} is not in the catalog")));
    }
    let slot = &CACHE[id.slot()];
    if let Some(g) = slot.get() {
        return Ok(g);
    }
    let g = GroupModel::build(id)?;
    Ok(slot.get_or_init(|| g))
}

/// Character value `χ(g)`.
pub fn char_value(id: GroupId, chi: CharId, g: usize) -> Result<Cyclo> {
    group(id)?.char_value(chi, g)
}

/// The elements `(γ, w)` of `Γ(ρ)`.
pub fn extended_elements(id: GroupId, rho: CharId) -> Result<Vec<ExtElement>> {
    group(id)?.extended_elements(rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        for id in GroupId::CATALOG {
            let g = group(id).unwrap();
            assert_eq!(g.order(), id.order(), "{id}");
            if let Some(o) = id.presentation_order() {
                assert_eq!(o, id.order(), "{id}");
            }
        }
        assert!(group(GroupId::Cyclic(10))
            .unwrap()
            .elements
            .iter()
            .all(|m| m.a[0][1].is_zero() && m.a[1][0].is_zero()));
    }

    #[test]
    fn closed_under_products_and_inverses() {
        for id in [GroupId::Quaternionic(12), GroupId::BinaryTetrahedral] {
            let g = group(id).unwrap();
            for a in &g.elements {
                assert!(g.index_of(&a.inverse_sl2()).is_some());
                for b in &g.elements {
                    assert!(g.index_of(&(a * b)).is_some());
                }
            }
        }
    }

    #[test]
    fn minus_identity_membership() {
        assert!(group(GroupId::Cyclic(2))
            .unwrap()
            .minus_identity_index()
            .is_some());
        for id in GroupId::CATALOG {
            let g = group(id).unwrap();
            if id.presentation().is_some() {
                assert!(g.minus_identity_index().is_some(), "{id}");
            }
        }
    }

    #[test]
    fn characters_are_multiplicative() {
        let cases = [
            (GroupId::Cyclic(10), CharId::CyclicPower(6)),
            (GroupId::Cyclic(4), CharId::CyclicPower(2)),
            (GroupId::Quaternionic(8), CharId::Chi0),
            (GroupId::Quaternionic(12), CharId::ChiPlus),
            (GroupId::Quaternionic(12), CharId::ChiMinus),
            (GroupId::Quaternionic(24), CharId::ChiPlus),
            (GroupId::BinaryOctahedral, CharId::OctChi),
        ];
        for (id, chi) in cases {
            let g = group(id).unwrap();
            let e = g.char_exponents(chi).unwrap();
            for (i, a) in g.elements.iter().enumerate() {
                for (j, b) in g.elements.iter().enumerate() {
                    let k = g.index_of(&(a * b)).unwrap();
                    assert_eq!((e[i] + e[j]) % N, e[k], "{id} {chi}");
                }
            }
        }
    }

    #[test]
    fn quaternionic_table_values() {
        for q in [8u32, 12, 24] {
            let g = group(GroupId::Quaternionic(q)).unwrap();
            let n = (q / 4) as i64;
            let i_n = Cyclo::root(30 * n);
            let minus = |c: &Cyclo| -c;
            let v = |chi, idx| g.char_value(chi, idx).unwrap();
            let (s, t, u) = (g.s.unwrap(), g.t, g.u.unwrap());
            assert_eq!(v(CharId::Chi0, s), Cyclo::one());
            assert_eq!(v(CharId::Chi0, t), Cyclo::from_int(-1));
            assert_eq!(v(CharId::Chi0, u), Cyclo::from_int(-1));
            assert_eq!(v(CharId::ChiPlus, s), Cyclo::from_int(-1));
            assert_eq!(v(CharId::ChiPlus, t), i_n);
            assert_eq!(v(CharId::ChiPlus, u), minus(&i_n));
            assert_eq!(v(CharId::ChiMinus, s), Cyclo::from_int(-1));
            assert_eq!(v(CharId::ChiMinus, t), minus(&i_n));
            assert_eq!(v(CharId::ChiMinus, u), i_n);
            let e0 = g.char_exponents(CharId::Chi0).unwrap();
            let ep = g.char_exponents(CharId::ChiPlus).unwrap();
            let em = g.char_exponents(CharId::ChiMinus).unwrap();
            for k in 0..g.order() {
                assert_eq!((e0[k] + ep[k]) % N, em[k]);
            }
        }
    }

    #[test]
    fn cyclic_character_on_t() {
        let g = group(GroupId::Cyclic(10)).unwrap();
        let v = g.char_value(CharId::CyclicPower(6), g.t).unwrap();
        assert_eq!(v, zeta(10).unwrap().pow(6).unwrap());
    }

    #[test]
    fn undefined_characters() {
        let g = group(GroupId::Cyclic(4)).unwrap();
        assert!(matches!(
            g.char_exponents(CharId::Chi0),
            Err(Error::CharacterUndefined { .. })
        ));
        let o = group(GroupId::BinaryOctahedral).unwrap();
        assert!(o.char_exponents(CharId::ChiPlus).is_err());
    }

    #[test]
    fn extended_element_counts() {
        let c2 = extended_elements(GroupId::Cyclic(2), CharId::Trivial).unwrap();
        assert_eq!(c2.len(), 4);
        assert!(c2.iter().all(|x| x.w_exp == 0 || x.w_exp == 60));
        assert_eq!(
            extended_elements(GroupId::Cyclic(4), CharId::CyclicPower(2))
                .unwrap()
                .len(),
            8
        );
        assert_eq!(
            extended_elements(GroupId::BinaryOctahedral, CharId::OctChi)
                .unwrap()
                .len(),
            96
        );
    }

    #[test]
    fn odd_characters_are_rejected() {
        assert!(extended_elements(GroupId::Cyclic(4), CharId::CyclicPower(1)).is_err());
        assert!(extended_elements(GroupId::Quaternionic(12), CharId::ChiPlus).is_err());
    }

    #[test]
    fn names_round_trip() {
        for id in GroupId::CATALOG {
            assert_eq!(id.name().parse::<GroupId>().unwrap(), id);
        }
        assert!("c3".parse::<GroupId>().is_err());
        let o = GroupId::BinaryOctahedral;
        assert_eq!(CharId::parse_for("chi", o).unwrap(), CharId::OctChi);
        let c = GroupId::Cyclic(10);
        assert_eq!(
            CharId::parse_for("chi^6", c).unwrap(),
            CharId::CyclicPower(6)
        );
        assert_eq!(CharId::parse_for("trivial", c).unwrap(), CharId::Trivial);
        assert!(CharId::parse_for("psi", c).is_err());
    }
}
