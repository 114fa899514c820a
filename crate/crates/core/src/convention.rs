//! Sign-convention ledger.
//!
//! The source material mixes left/right action conventions, so every signed
//! identity in this crate is asserted relative to the entries below. The
//! ledger is fixed once, here, so that the dressing-shift identities
//! `pi_lambda^sharp(alpha_H) = l_H` and `pi_lambda^sharp(alpha_E) = l_E` hold
//! verbatim on the `ax+b` fixture; everything else is recorded relative to
//! that anchor and re-verified by the suites on every run.
//!
//! | entry | value | meaning |
//! |-------|-------|---------|
//! | `sharp_slot` | second | `(pi^#(alpha))^a = pi^{ab} alpha_b` |
//! | `vf_morphism_sign` | -1 | `l_{[X,Y]} = -[l_X, l_Y]`; `X -> -l_X` is the homomorphism |
//! | `algmorph_sign` | -1 | `alpha_{[X,Y]} = -[alpha_X, alpha_Y]_pi` |
//! | `koszul_d_term` | +1 | `[a,b]_pi = L_{pi#a} b - L_{pi#b} a + d(pi(a,b))` under `sharp_slot` |
//! | `mc_constant` | -1 | `d alpha_X = -(alpha ^ alpha)(delta X)` |
//! | `dressing_x_sign` | +1 | derived dressing action `(x,y).(a,n) = (x + n y, e^{-2a} y)` |
//! | `action_composition` | opposite | `(p.s).s' = p.(s' s)` for the derived action |
//! | `star_generator_sign` | -1 | star products act through the homomorphism `X -> -l_X` |
//! | `twist_leg_order` | straight | first leg of `F^{-1}` acts on the left factor |
//! | `semiclassical_sign` | -1 | first-order antisymmetric part of `star` is `-{.,.}` of the induced tensor |
//! | `pairing_order` | left-to-right | `<X_1...X_k, f> = (X_1^L o ... o X_k^L f)(e)` |
//! | `cocycle_route` | inverse | comodule deformation pairs legs of `F^{-1}` via the inverse-action coaction |
//! | `r_contraction_slot` | second | `r#(xi) = r^{ij} X_i <xi, X_j>`, used in `j(xi) = xi - r#(xi)` |

/// Ledger entries in display form, embedded into every run report.
pub fn ledger_entries() -> Vec<(&'static str, &'static str)> {
    vec![
        ("sharp_slot", "second: (pi^#(a))^i = pi^{ij} a_j"),
        ("vf_morphism_sign", "-1: l_[X,Y] = -[l_X, l_Y]"),
        ("algmorph_sign", "-1: alpha_[X,Y] = -[alpha_X, alpha_Y]_pi"),
        (
            "koszul_d_term",
            "+1: [a,b]_pi = L_{pi#a}b - L_{pi#b}a + d(pi(a,b))",
        ),
        ("mc_constant", "-1: d alpha_X = -(alpha^alpha)(delta X)"),
        ("dressing_x_sign", "+1: (x,y).(a,n) = (x + n y, exp(-2a) y)"),
        ("action_composition", "opposite: (p.s).s' = p.(s's)"),
        (
            "star_generator_sign",
            "-1: star products act through X -> -l_X",
        ),
        (
            "twist_leg_order",
            "straight: first leg of F^-1 acts on the left factor",
        ),
        (
            "semiclassical_sign",
            "-1: antisym. first order of star = -bracket of induced tensor",
        ),
        (
            "pairing_order",
            "left-to-right: <X1..Xk, f> = (X1^L o .. o Xk^L f)(e)",
        ),
        (
            "cocycle_route",
            "inverse: comodule route pairs F^-1 legs via inverse-action coaction",
        ),
        (
            "r_contraction_slot",
            "second: r#(xi) = r^{ij} X_i <xi, X_j>",
        ),
    ]
}

/// Global sign making `X -> sign * l_X` a Lie algebra homomorphism.
pub const VF_MORPHISM_SIGN: i64 = -1;
/// Sign in `alpha_{[X,Y]} = ALGMORPH_SIGN * [alpha_X, alpha_Y]_pi`.
pub const ALGMORPH_SIGN: i64 = -1;
/// Constant in `d alpha_X = MC_CONSTANT * (alpha ^ alpha)(delta X)`.
pub const MC_CONSTANT: i64 = -1;
/// Sign in `antisym_1(f star g) = SEMICLASSICAL_SIGN * {f,g}` of the induced tensor.
pub const SEMICLASSICAL_SIGN: i64 = -1;
