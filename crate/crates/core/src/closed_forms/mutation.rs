//! Single-token faults that can be switched on inside the closed forms.
//!
//! Each [`Mutation`] flips one sign or shifts one harmonic index in one
//! right-hand side. The verifier uses them to show that its default grids
//! are not vacuous: every mutation must make some case fail.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::IdentityId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mutation {
    ThmH2T0BoundarySign,
    ThmHsqT0SquareSign,
    ThmH2T1ShiftedIndex,
    ThmHsqT2WSign,
    LemmaT0SecondTermSign,
    LemmaT2CubicSign,
    DegenT1Factor,
    CorAOddSign,
    CorCIndex,
    CorDIndex,
    CorKSign,
    CorNIndex,
    CorUIndex,
    CorVOddIndex,
    CorXSign,
}

impl Mutation {
    pub const ALL: [Mutation; 15] = [
        Mutation::ThmH2T0BoundarySign,
        Mutation::ThmHsqT0SquareSign,
        Mutation::ThmH2T1ShiftedIndex,
        Mutation::ThmHsqT2WSign,
        Mutation::LemmaT0SecondTermSign,
        Mutation::LemmaT2CubicSign,
        Mutation::DegenT1Factor,
        Mutation::CorAOddSign,
        Mutation::CorCIndex,
        Mutation::CorDIndex,
        Mutation::CorKSign,
        Mutation::CorNIndex,
        Mutation::CorUIndex,
        Mutation::CorVOddIndex,
        Mutation::CorXSign,
    ];

    /// The identity whose right-hand side contains the mutated token.
    pub fn target(self) -> IdentityId {
        use IdentityId::*;
        match self {
            Mutation::ThmH2T0BoundarySign => ThmH2T0,
            Mutation::ThmHsqT0SquareSign => ThmHsqT0,
            Mutation::ThmH2T1ShiftedIndex => ThmH2T1,
            Mutation::ThmHsqT2WSign => ThmHsqT2,
            Mutation::LemmaT0SecondTermSign => LemmaT0,
            Mutation::LemmaT2CubicSign => LemmaT2,
            Mutation::DegenT1Factor => DegenT1,
            Mutation::CorAOddSign => CorA,
            Mutation::CorCIndex => CorC,
            Mutation::CorDIndex => CorD,
            Mutation::CorKSign => CorK,
            Mutation::CorNIndex => CorN,
            Mutation::CorUIndex => CorU,
            Mutation::CorVOddIndex => CorV,
            Mutation::CorXSign => CorX,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Mutation::ThmH2T0BoundarySign => "sign of 4n/(x(x-n)^2) flipped",
            Mutation::ThmHsqT0SquareSign => "sign of 2[H_n(x)+H_n(-x)]^2 flipped",
            Mutation::ThmH2T1ShiftedIndex => "H_{n+1}((x-n-2)/2) replaced by H_n((x-n-2)/2)",
            Mutation::ThmHsqT2WSign => "sign of W_n(x) flipped",
            Mutation::LemmaT0SecondTermSign => "sign of the second binomial-ratio term flipped",
            Mutation::LemmaT2CubicSign => "2n^3 replaced by -2n^3 in the first polynomial",
            Mutation::DegenT1Factor => "n(n+1) replaced by n(n-1)",
            Mutation::CorAOddSign => "odd branch: 2H_n^<2> replaced by -2H_n^<2>",
            Mutation::CorCIndex => "H_{2n} replaced by H_{2n+1}",
            Mutation::CorDIndex => "A(p,n) even branch: H_{(p-n-2)/2} replaced by H_{(p-n)/2}",
            Mutation::CorKSign => "sign of (n-1)/n^2 flipped",
            Mutation::CorNIndex => "3H_{n-p} replaced by 3H_{n-p+1}",
            Mutation::CorUIndex => "H_{p-n-1} replaced by H_{p-n} inside the square",
            Mutation::CorVOddIndex => "odd branch: H_{(n-1)/2}^<2> replaced by H_{(n+1)/2}^<2>",
            Mutation::CorXSign => "sign of (3n+1)/n^2 flipped",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{self:?}"))
    }
}

/// The (at most one) active mutation threaded through an evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Tweak(pub(crate) Option<Mutation>);

impl Tweak {
    pub const NONE: Tweak = Tweak(None);

    pub fn is(self, m: Mutation) -> bool {
        self.0 == Some(m)
    }

    /// `-1` when `m` is active, `1` otherwise.
    pub fn sign(self, m: Mutation) -> i64 {
        if self.is(m) {
            -1
        } else {
            1
        }
    }

    /// `by` when `m` is active, `0` otherwise.
    pub fn shift(self, m: Mutation, by: i64) -> i64 {
        if self.is(m) {
            by
        } else {
            0
        }
    }
}
