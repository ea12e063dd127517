use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

macro_rules! identities {
    ($($variant:ident => $name:literal, $desc:literal;)*) => {
        /// Every registered identity.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            /// Kebab-case name, e.g. `cubic-f1`.
            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            /// One-line statement of what is checked.
            pub fn description(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $desc,)*
                }
            }
        }
    };
}

identities! {
    BinomThm => "binom-thm", "A(1-x) = δ(x) + (q-1)^{-1} ∑_χ J(A, χ̄) χ(x), and its binomial form";
    AltBinom => "alt-binom", "B̄(x) ĀB(1-x) = B(-1)(q-1)^{-1} ∑_χ J(Aχ, \\overline{Bχ}) χ(-x)";
    Jacobi1 => "jacobi-1", "J(A, B̄) = A(-1) J(A, BĀ) and (A choose B) = (A choose AB̄)";
    Jacobi2 => "jacobi-2", "J(A, B̄) = B(-1) J(BĀ, B̄) and (A choose B) = B(-1)(BĀ choose B)";
    Jacobi3 => "jacobi-3", "(A choose B) = AB(-1)(B̄ choose Ā)";
    Jacobi4 => "jacobi-4", "J(A,B̄)J(C,Ā) = B(-1)J(C,B̄)J(B̄C,ĀB) - δ(A)(q-1) + δ(BC̄)(q-1)";
    PdJacobiN1 => "pd-jacobi-n1", "one-variable Jacobi and binomial expansions of P_D^(1), with the δ(λ) term";
    PdJacobiN2 => "pd-jacobi-n2", "two-variable Jacobi and binomial expansions of P_D^(2) for λ_1 λ_2 ≠ 0";
    PdJacobiCor => "pd-jacobi-cor", "two-variable binomial expansion with all three δ corrections, every λ";
    P2Trans1 => "p2-trans-1", "₂P₁[A,B;C;λ] = ABC(-1) C̄(λ) ₂P₁[C̄B, C̄A; C̄; λ] + δ(λ) J(B, CB̄)";
    P2Trans2 => "p2-trans-2", "₂P₁[A,B;C;λ] = ABC(-1) Ā(λ) ₂P₁[A, C̄A; B̄A; 1/λ] + δ(λ) J(B, CB̄)";
    P2Trans3 => "p2-trans-3", "₂P₁[A,B;C;λ] = B(-1) ₂P₁[A, B; ABC̄; 1-λ]";
    PdOneMinus => "pd-one-minus", "P_D^(2)[A;B_1,B_2;C;λ] = A(-1) P_D^(2)[A;B_1,B_2;AC̄B_1B_2;1-λ]";
    FdOneMinus => "fd-one-minus", "F_D^(2) under λ ↦ 1-λ with factor J(A,C̄B_1B_2)/(A(-1)J(A,CĀ))";
    PdInv1 => "pd-inv-1", "P_D^(1)[A;B;C;λ] = AC(-1) B̄(-λ) P_D^(1)[C̄B;B;ĀB;1/λ] + δ(λ) J(A, CĀ)";
    PdInv2 => "pd-inv-2", "P_D^(2) under λ_i ↦ 1/λ_i for λ_i ≠ 0";
    PdPfaff1 => "pd-pfaff-1", "both one-variable Pfaff forms under λ ↦ λ/(λ-1) with δ(1-λ) J(A, C\\overline{AB})";
    PdPfaff2 => "pd-pfaff-2", "P_D^(2) under λ_i ↦ λ_i/(λ_i-1) for λ_i ≠ 1";
    P2Euler => "p2-euler", "₂P₁[A,B;C;λ] = CĀB̄(1-λ) ₂P₁[CĀ, CB̄; C; λ] + δ(1-λ) J(B, CĀB̄)";
    P2Symm1 => "p2-symm-1", "J(A,ĀC) ₂P₁[A,B;C;λ] = J(B,B̄C) ₂P₁[B,A;C;λ] and ₂F₁ symmetry, primitive";
    P2Symm2 => "p2-symm-2", "₂P₁ and ₂F₁ conjugation for primitive parameters and λ ≠ 0, 1";
    DiagReduce => "diag-reduce", "P_D^(2) and F_D^(2) at λ_1 = λ_2 reduce to ₂P₁ / ₂F₁ when A, B_1B_2 ≠ ε";
    PdReduce1 => "pd-reduce-1", "P_D^(2)[A;ε,B_2;C;λ] reduction for λ_1 ≠ 0";
    PdReduce2 => "pd-reduce-2", "P_D^(2)[A;B_1,B_2;A;λ] reduction for λ_1 ≠ 0";
    PdReduce3 => "pd-reduce-3", "P_D^(2)[A;B,CB̄;C;λ] reduction for λ_2 ≠ 1";
    PdReduce4 => "pd-reduce-4", "P_D^(2)[ε;B_1,B_2;C;λ] reduction for λ_1 ≠ 0, 1 and λ_2 ≠ 1";
    CubicF1 => "cubic-f1", "F_D^(2)[η;η,η;ε;1-λ³,1-μ³] = F_D^(2)[η;η,η;ε;ζ_1³,ζ_2³] for 1+λ+μ ≠ 0";
    Cubic2F1 => "cubic-2f1", "₂F₁[η,η²;ε;1-λ³] = ₂F₁[η,η²;ε;((1-λ)/(1+2λ))³] for 1+2λ ≠ 0";
    PointCount => "pointcount", "period-function point count of y^N = x^i(1-x)^j∏(1-λx)^k equals enumeration";
    HasseCong => "hasse-cong", "Hasse invariant = (-1)^m F_D^(2)[1/3;1/3,1/3;1;s,t]_m mod p, and the truncated cubic congruence";
    TraceEqual => "trace-equal", "a_p(y³ = c f_{λ,μ}) = a_p(y³ = c g_{λ,μ}) for c = 1 and c = g";
    ClassicalPfaff => "classical-pfaff", "F_1[a;b_1,b_2;c;x,y] = (1-x)^{-b_1}(1-y)^{-b_2} F_1[c-a;b_1,b_2;c;x/(x-1),y/(y-1)]";
    ClassicalEuler => "classical-euler", "F_1[a;b_1,b_2;c;x,y] = (1-x)^{c-a-b_1}(1-y)^{-b_2} F_1[c-a;c-b_1-b_2,b_2;c;x,(x-y)/(1-y)]";
    ClassicalDiag => "classical-diag", "coefficients of F_D^(2)[a;b_1,b_2;c;x,x] equal those of ₂F₁[a,b_1+b_2;c;x]";
    KoikeShiga => "koike-shiga", "cubic transformation of F_1[1/3;1/3,1/3;1] over C";
    Borwein => "borwein", "cubic transformation of ₂F₁[1/3,2/3;1] over R";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Accepts `cubic-f1`, `CUBIC_F1` and any mix of case and `-`/`_`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == wanted)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
