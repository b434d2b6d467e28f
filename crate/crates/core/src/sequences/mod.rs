//! Named coefficient sequences, each computable by every formula available
//! for it. A method is selected by a tag; all tags for a sequence agree.

mod components;
mod stirling;
mod watson;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use components::{
    alpha, alpha_star, beta, beta_integral_closed, beta_integral_f, beta_star, monomial_integral,
    ratfun_integral, AlphaMethod, AlphaStarMethod, BetaMethod, BetaStarMethod, IntegralError,
};
pub use stirling::{
    gamma, psi, psi_from, rho, rho_hat, s_series, tau, v_series, vstar_series, GammaMethod,
    RhoHatMethod, TauMethod,
};
pub use watson::{c_n, c_upto, d_n, has_parity, s_n_k, u_series, CMethod};

use crate::algebra::{int, Rat, Sqrt2Rat};
use crate::triangles::{bernoulli, bernoulli_by_recurrence, omega};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("unknown method {method:?} for {sequence}; known: {known}")]
    UnknownMethod { sequence: &'static str, method: String, known: String },
}

/// A method tag with a stable kebab-case name.
pub trait MethodTag: Copy + fmt::Debug + 'static {
    const ALL: &'static [Self];
    fn name(self) -> &'static str;

    fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|m| m.name() == s)
    }
}

macro_rules! method_tags {
    ($t:ty, $all:ident { $($v:ident => $s:literal),* $(,)? }) => {
        pub const $all: &[$t] = &[$(<$t>::$v),*];
        impl MethodTag for $t {
            const ALL: &'static [Self] = $all;
            fn name(self) -> &'static str {
                match self { $(<$t>::$v => $s),* }
            }
        }
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

method_tags!(GammaMethod, GAMMA_METHODS {
    WrenchRecurrence => "wrench-recurrence",
    BinomialDeMoivre => "binomial-demoivre",
    ReciprocalStream => "perron-demoivre",
    FactorialStream => "brassesco-mendez-demoivre",
    AssocCycle => "assoc-cycle",
    AssocSet => "assoc-set",
    ExpOfLog => "exp-of-log",
    FromC => "from-c",
    VPower => "v-power",
    VStarCoeff => "vstar-coeff",
});

method_tags!(RhoHatMethod, RHO_HAT_METHODS {
    BinomialDeMoivre => "binomial-demoivre",
    ReciprocalStream => "reciprocal-demoivre",
    FactorialStream => "factorial-demoivre",
    AssocCycle => "assoc-cycle",
    AssocSet => "assoc-set",
    AlphaRecurrence => "alpha-recurrence",
    FromC => "from-c",
    VPower => "v-power",
    VStarCoeff => "vstar-coeff",
});

method_tags!(TauMethod, TAU_METHODS {
    BinomialDeMoivre => "binomial-demoivre",
    VPower => "v-power",
    VStarLogDerivative => "vstar-log-derivative",
    FromC => "from-c",
});

method_tags!(CMethod, C_METHODS {
    Recursion => "recursion",
    Reversion => "reversion",
});

method_tags!(AlphaMethod, ALPHA_METHODS {
    Definition => "definition",
    Eulerian => "eulerian",
    Bernoulli => "bernoulli",
    BetaIntegral => "beta-integral",
});

method_tags!(AlphaStarMethod, ALPHA_STAR_METHODS {
    Definition => "definition",
    Eulerian => "eulerian",
    BetaIntegral => "beta-integral",
    BetaIntegralUnstarred => "beta-integral-unstarred",
    EulerianClosed => "eulerian-closed",
});

method_tags!(BetaMethod, BETA_METHODS {
    Definition => "definition",
    Eulerian => "eulerian",
    BetaIntegral => "beta-integral",
});

method_tags!(BetaStarMethod, BETA_STAR_METHODS {
    Definition => "definition",
    Eulerian => "eulerian",
});

/// A sequence value: rational, or in ℚ(√2) for `c_n`.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Rat(Rat),
    Sqrt2(Sqrt2Rat),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rat(r) => write!(f, "{r}"),
            Value::Sqrt2(s) => write!(f, "{s}"),
        }
    }
}

impl From<Rat> for Value {
    fn from(r: Rat) -> Self {
        Value::Rat(r)
    }
}

impl From<Sqrt2Rat> for Value {
    fn from(s: Sqrt2Rat) -> Self {
        Value::Sqrt2(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeqValue {
    pub index: usize,
    pub value: Value,
    pub method: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sequence {
    Gamma,
    Rho,
    RhoHat,
    Psi,
    Tau,
    C,
    Alpha,
    AlphaStar,
    Beta,
    BetaStar,
    Omega,
    Bernoulli,
}

impl Sequence {
    pub const ALL: [Sequence; 12] = [
        Sequence::Gamma,
        Sequence::Rho,
        Sequence::RhoHat,
        Sequence::Psi,
        Sequence::Tau,
        Sequence::C,
        Sequence::Alpha,
        Sequence::AlphaStar,
        Sequence::Beta,
        Sequence::BetaStar,
        Sequence::Omega,
        Sequence::Bernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::Gamma => "gamma",
            Sequence::Rho => "rho",
            Sequence::RhoHat => "rho_hat",
            Sequence::Psi => "psi",
            Sequence::Tau => "tau",
            Sequence::C => "c",
            Sequence::Alpha => "alpha",
            Sequence::AlphaStar => "alpha_star",
            Sequence::Beta => "beta",
            Sequence::BetaStar => "beta_star",
            Sequence::Omega => "omega",
            Sequence::Bernoulli => "bernoulli",
        }
    }

    /// Method names in preference order; the first is the default.
    pub fn methods(self) -> Vec<&'static str> {
        fn names<M: MethodTag>() -> Vec<&'static str> {
            M::ALL.iter().map(|m| m.name()).collect()
        }
        match self {
            Sequence::Gamma => names::<GammaMethod>(),
            Sequence::Rho | Sequence::RhoHat => names::<RhoHatMethod>(),
            Sequence::Psi => vec!["triangular-solve"],
            Sequence::Tau => names::<TauMethod>(),
            Sequence::C => names::<CMethod>(),
            Sequence::Alpha => names::<AlphaMethod>(),
            Sequence::AlphaStar => names::<AlphaStarMethod>(),
            Sequence::Beta => names::<BetaMethod>(),
            Sequence::BetaStar => names::<BetaStarMethod>(),
            Sequence::Omega => vec!["at-array"],
            Sequence::Bernoulli => vec!["at-array", "recurrence"],
        }
    }

    /// The value at `index` by the named method, or the default method.
    pub fn value(self, index: usize, method: Option<&str>) -> Result<SeqValue, SequenceError> {
        let known = self.methods();
        let name = match method {
            None => known[0],
            Some(m) => *known.iter().find(|k| **k == m).ok_or_else(|| SequenceError::UnknownMethod {
                sequence: self.name(),
                method: m.to_string(),
                known: known.join(", "),
            })?,
        };
        fn tag<M: MethodTag>(name: &str) -> M {
            M::parse(name).expect("name taken from the method table")
        }
        let value = match self {
            Sequence::Gamma => Value::Rat(gamma(index, tag(name))),
            Sequence::Rho => Value::Rat(
                rho_hat(index, tag(name)) + int((index == 0) as i64),
            ),
            Sequence::RhoHat => Value::Rat(rho_hat(index, tag(name))),
            Sequence::Psi => Value::Rat(psi(index)),
            Sequence::Tau => Value::Rat(tau(index, tag(name))),
            Sequence::C => Value::Sqrt2(c_n(index, tag(name))),
            Sequence::Alpha => Value::Rat(alpha(index, tag(name))),
            Sequence::AlphaStar => Value::Rat(alpha_star(index, tag(name))),
            Sequence::Beta => Value::Rat(beta(index, tag(name))),
            Sequence::BetaStar => Value::Rat(beta_star(index, tag(name))),
            Sequence::Omega => Value::Rat(omega(index)),
            Sequence::Bernoulli => Value::Rat(if name == "at-array" {
                bernoulli(index)
            } else {
                bernoulli_by_recurrence(index)
            }),
        };
        Ok(SeqValue { index, value, method: name })
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| SequenceError::UnknownSequence(s.to_string()))
    }
}

/// First disagreement between two methods of one sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct Disagreement {
    pub index: usize,
    pub first: SeqValue,
    pub second: SeqValue,
}

/// Evaluates every method of `seq` at indices `0..=max` and reports the
/// first index where any method differs from the default one.
pub fn cross_check(seq: Sequence, max: usize) -> Result<(), Disagreement> {
    use rayon::prelude::*;
    let methods = seq.methods();
    let bad = (0..=max)
        .into_par_iter()
        .filter_map(|i| {
            let base = seq.value(i, Some(methods[0])).expect("known method");
            methods[1..].iter().find_map(|m| {
                let v = seq.value(i, Some(m)).expect("known method");
                (v.value != base.value).then(|| Disagreement { index: i, first: base.clone(), second: v })
            })
        })
        .min_by_key(|d| d.index);
    match bad {
        Some(d) => Err(d),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn names_round_trip() {
        for s in Sequence::ALL {
            assert_eq!(s.name().parse::<Sequence>().unwrap(), s);
            for m in s.methods() {
                assert_eq!(s.value(0, Some(m)).unwrap().method, m);
            }
        }
        assert!("zeta".parse::<Sequence>().is_err());
        assert!(matches!(
            Sequence::Gamma.value(0, Some("bogus")),
            Err(SequenceError::UnknownMethod { .. })
        ));
    }

    #[test]
    fn default_values() {
        let v = Sequence::Rho.value(0, None).unwrap();
        assert_eq!(v.value, Value::Rat(rat(1, 3)));
        let c3 = Sequence::C.value(3, None).unwrap();
        assert_eq!(c3.value.to_string(), "0+1/18*sqrt2");
    }

    #[test]
    fn cross_small() {
        for s in Sequence::ALL {
            assert_eq!(cross_check(s, 6), Ok(()), "{s}");
        }
    }
}
