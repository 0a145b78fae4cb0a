use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::oracle::{Family, Weight};
use crate::rational::Rational;

/// Where `p` sits relative to `n` for a corollary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PRange {
    /// `p = 0`
    Zero,
    /// `0 < p <= n`
    Between,
    /// `p = n`, summed in the reduced form `sum (-1)^k C(n,k) ...`
    Equal,
    /// `p > n`
    Above,
}

/// What kind of identity an [`IdentityId`] names, with its selectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Lemma { t: u8 },
    Theorem(Family),
    Corollary { family: Family, range: PRange },
    Degenerate { t: u8 },
}

macro_rules! identities {
    ($($var:ident => $name:literal),* $(,)?) => {
        /// The 36 verified identities, in canonical order.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($var),*
        }

        impl IdentityId {
            pub const ALL: [IdentityId; 36] = [$(IdentityId::$var),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$var => $name),*
                }
            }
        }
    };
}

identities! {
    LemmaT0 => "LEMMA_T0", LemmaT1 => "LEMMA_T1", LemmaT2 => "LEMMA_T2",
    ThmH2T0 => "THM_H2_T0", ThmH2T1 => "THM_H2_T1", ThmH2T2 => "THM_H2_T2",
    ThmHsqT0 => "THM_HSQ_T0", ThmHsqT1 => "THM_HSQ_T1", ThmHsqT2 => "THM_HSQ_T2",
    CorA => "COR_A", CorB => "COR_B", CorC => "COR_C", CorD => "COR_D",
    CorE => "COR_E", CorF => "COR_F", CorG => "COR_G", CorH => "COR_H",
    CorI => "COR_I", CorJ => "COR_J", CorK => "COR_K", CorL => "COR_L",
    CorM => "COR_M", CorN => "COR_N", CorO => "COR_O", CorP => "COR_P",
    CorR => "COR_R", CorS => "COR_S", CorT => "COR_T", CorU => "COR_U",
    CorV => "COR_V", CorW => "COR_W", CorX => "COR_X", CorY => "COR_Y",
    DegenT0 => "DEGEN_T0", DegenT1 => "DEGEN_T1", DegenT2 => "DEGEN_T2",
}

const COROLLARIES: [IdentityId; 24] = {
    use IdentityId::*;
    [
        CorA, CorB, CorC, CorD, CorE, CorF, CorG, CorH, CorI, CorJ, CorK, CorL, CorM, CorN,
        CorO, CorP, CorR, CorS, CorT, CorU, CorV, CorW, CorX, CorY,
    ]
};

impl IdentityId {
    pub fn kind(self) -> Kind {
        use IdentityId::*;
        let fam = |weight, t| Family { weight, t };
        match self {
            LemmaT0 => Kind::Lemma { t: 0 },
            LemmaT1 => Kind::Lemma { t: 1 },
            LemmaT2 => Kind::Lemma { t: 2 },
            ThmH2T0 => Kind::Theorem(fam(Weight::H2, 0)),
            ThmH2T1 => Kind::Theorem(fam(Weight::H2, 1)),
            ThmH2T2 => Kind::Theorem(fam(Weight::H2, 2)),
            ThmHsqT0 => Kind::Theorem(fam(Weight::Hsq, 0)),
            ThmHsqT1 => Kind::Theorem(fam(Weight::Hsq, 1)),
            ThmHsqT2 => Kind::Theorem(fam(Weight::Hsq, 2)),
            DegenT0 => Kind::Degenerate { t: 0 },
            DegenT1 => Kind::Degenerate { t: 1 },
            DegenT2 => Kind::Degenerate { t: 2 },
            cor => {
                // Corollaries come in blocks of four (p = 0, 0 < p <= n,
                // p = n, p > n), one block per family in Family::ALL order.
                let i = COROLLARIES.iter().position(|c| *c == cor).expect("corollary");
                let range = [PRange::Zero, PRange::Between, PRange::Equal, PRange::Above][i % 4];
                Kind::Corollary { family: Family::ALL[i / 4], range }
            }
        }
    }

    pub fn corollaries() -> &'static [IdentityId] {
        &COROLLARIES
    }

    pub fn is_corollary(self) -> bool {
        matches!(self.kind(), Kind::Corollary { .. })
    }

    /// Whether the identity takes a `y` parameter.
    pub fn uses_y(self) -> bool {
        matches!(self.kind(), Kind::Lemma { .. })
    }

    /// Whether the identity takes an `x` parameter.
    pub fn uses_x(self) -> bool {
        !self.is_corollary()
    }

    /// Short statement of the left-hand side.
    pub fn description(self) -> String {
        let weight = |w: Weight, idx: &str| match w {
            Weight::H2 => format!("H_{{{idx}}}^<2>"),
            Weight::Hsq => format!("H_{{{idx}}}^2"),
        };
        let kt = |t: u8| match t {
            0 => String::new(),
            1 => " k".to_string(),
            t => format!(" k^{t}"),
        };
        match self.kind() {
            Kind::Lemma { t } => format!(
                "sum_k (-1)^k{} C(n,k) C(n+k,k) C(x+k,k) / (C(y+k,k) C(2x-y+k,k))",
                kt(t)
            ),
            Kind::Degenerate { t } => {
                format!("sum_k (-1)^k{} C(n,k) C(n+k,k) / C(x+k,k)  (the y = x case)", kt(t))
            }
            Kind::Theorem(f) => format!(
                "sum_k (-1)^k C(n,k) C(n+k,k) / C(x+k,k){} {}",
                kt(f.t),
                match f.weight {
                    Weight::H2 => "H_k^<2>(x)",
                    Weight::Hsq => "H_k(x)^2",
                }
            ),
            Kind::Corollary { family: f, range } => match range {
                PRange::Zero => format!(
                    "sum_k (-1)^k C(n,k) C(n+k,k){} {}",
                    kt(f.t),
                    weight(f.weight, "k")
                ),
                PRange::Equal => format!(
                    "sum_k (-1)^k C(n,k){} {}",
                    kt(f.t),
                    weight(f.weight, "n+k")
                ),
                PRange::Between | PRange::Above => format!(
                    "sum_k (-1)^k C(n+k,k) C(p+n,n-k){} {}, {}",
                    kt(f.t),
                    weight(f.weight, "p+k"),
                    if range == PRange::Between { "0 < p <= n" } else { "p > n" }
                ),
            },
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == up)
            .ok_or_else(|| Error::Parse(format!("unknown identity `{s}`")))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One parameter point. Which fields are meaningful depends on the identity:
/// theorems and degenerate forms read `(n, x)`, lemmas `(n, x, y)`, and
/// corollaries `(n, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub n: u64,
    pub p: Option<u64>,
    pub x: Option<Rational>,
    pub y: Option<Rational>,
}

impl Params {
    pub fn n(n: u64) -> Self {
        Params { n, p: None, x: None, y: None }
    }

    pub fn np(n: u64, p: u64) -> Self {
        Params { p: Some(p), ..Params::n(n) }
    }

    pub fn nx(n: u64, x: Rational) -> Self {
        Params { x: Some(x), ..Params::n(n) }
    }

    pub fn nxy(n: u64, x: Rational, y: Rational) -> Self {
        Params { x: Some(x), y: Some(y), ..Params::n(n) }
    }

    pub(crate) fn need_x(&self) -> Result<&Rational> {
        self.x.as_ref().ok_or_else(|| Error::DomainError("parameter x is required".into()))
    }

    pub(crate) fn need_y(&self) -> Result<&Rational> {
        self.y.as_ref().ok_or_else(|| Error::DomainError("parameter y is required".into()))
    }

    /// Ordering key for minimal counterexamples: `n`, then `p`, then the
    /// height `|num| + den` of `x` (and of `y`), then the values themselves.
    pub fn size_key(&self) -> impl Ord {
        let height = |r: &Option<Rational>| r.as_ref().map(Rational::height);
        (self.n, self.p, height(&self.x), height(&self.y), self.x.clone(), self.y.clone())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(p) = self.p {
            write!(f, " p={p}")?;
        }
        if let Some(x) = &self.x {
            write!(f, " x={x}")?;
        }
        if let Some(y) = &self.y {
            write!(f, " y={y}")?;
        }
        Ok(())
    }
}
