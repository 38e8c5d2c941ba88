//! The identity catalog: one [`IdentityCase`] per verified identity, grouped
//! into suites.

mod algebra;
mod centralizer;
mod corollary;
mod osp;
mod pairings;
mod relations;

use crate::env::Env;
use crate::expr::Expr;
use crate::CaseError;

pub type Builder = fn(&Env) -> Result<Vec<Expr>, CaseError>;

/// What a configuration must provide for a case to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Needs {
    pub min_dim: usize,
    /// The reference basis must be orthonormal.
    pub orthonormal: bool,
}

impl Needs {
    pub const fn dim(min_dim: usize) -> Self {
        Needs {
            min_dim,
            orthonormal: false,
        }
    }

    pub const fn orthonormal(min_dim: usize) -> Self {
        Needs {
            min_dim,
            orthonormal: true,
        }
    }
}

/// One identity: every expression returned by `build` must evaluate to
/// zero.
#[derive(Clone, Copy)]
pub struct IdentityCase {
    pub id: &'static str,
    pub suite: &'static str,
    /// The identity in formula form.
    pub anchor: &'static str,
    pub needs: Needs,
    pub build: Builder,
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("suite", &self.suite)
            .finish()
    }
}

/// Suite ids with a one-line description, in catalog order.
pub const SUITES: &[(&str, &str)] = &[
    (
        "osp-relations",
        "defining brackets of the osp(1|2) generators",
    ),
    (
        "osp-structure",
        "realization condition, pairing form of the generators, Casimir and Scasimir",
    ),
    (
        "projectors",
        "extremal projectors of osp(1|2) and sl(2) and their laws",
    ),
    (
        "generalized-symmetry",
        "generalized symmetries of the Dirac element",
    ),
    (
        "algebra",
        "defining relations and distinguished elements of the ambient superalgebra",
    ),
    (
        "pairings",
        "bilinear-form elements and their adjoint action",
    ),
    (
        "sl2-centralizer",
        "angular momenta and the centralizer of sl(2)",
    ),
    (
        "centralizer-membership",
        "projected elements supercommute with osp(1|2)",
    ),
    (
        "route-agreement",
        "projector and explicit constructions coincide",
    ),
    (
        "centralizer-structure",
        "group action, chain rules, recursion and closed forms",
    ),
    (
        "relations",
        "antisymmetrized and bracket relations between projected elements",
    ),
    ("squares", "squares of basis-indexed projected elements"),
    ("center", "top element and the central quadratic element"),
    (
        "orthonormal-basis",
        "bracket relations for distinct orthonormal basis indices",
    ),
];

macro_rules! case {
    ($id:literal, $suite:literal, $anchor:literal, $needs:expr, $build:path) => {
        IdentityCase {
            id: $id,
            suite: $suite,
            anchor: $anchor,
            needs: $needs,
            build: $build,
        }
    };
}

/// Every case, in catalog order.
pub fn catalog() -> Vec<IdentityCase> {
    use Needs as N;
    vec![
        // osp(1|2)
        case!("osp.odd-odd-mixed", "osp-relations", "[X, D] = 2H", N::dim(1), osp::odd_odd_mixed),
        case!("osp.cartan-odd", "osp-relations", "[H, X] = X, [H, D] = −D", N::dim(1), osp::cartan_odd),
        case!("osp.odd-squares", "osp-relations", "[X, X] = 4E⁺, [D, D] = −4E⁻", N::dim(1), osp::odd_squares),
        case!("osp.even-raise-lower", "osp-relations", "[E⁺, E⁻] = H", N::dim(1), osp::even_raise_lower),
        case!("osp.cartan-even", "osp-relations", "[H, E±] = ±2E±", N::dim(1), osp::cartan_even),
        case!("osp.odd-even", "osp-relations", "[X, E⁻] = D, [D, E⁺] = X", N::dim(1), osp::odd_even),
        case!("osp.realization-condition", "osp-structure", "[[X, D], X] = 2X, [[X, D], D] = −2D", N::dim(1), osp::realization),
        case!("osp.generators-as-pairings", "osp-structure", "H = (x⁺⊙x⁻)(B), E± = ±(x^±⊙x^±)(B)/2, X = (x⁺⊙γ)(B), D = (x⁻⊙γ)(B)", N::dim(1), osp::generators_as_pairings),
        case!("osp.casimir-central", "osp-structure", "[Ω_osp, a] = 0 for a ∈ {H, E±, X, D}", N::dim(1), osp::casimir_central),
        case!("osp.scasimir-grading", "osp-structure", "[S, H] = [S, E±] = 0, SX + XS = SD + DS = 0", N::dim(1), osp::scasimir_grading),
        case!("osp.scasimir-square", "osp-structure", "S² = Ω_osp + 1/4", N::dim(1), osp::scasimir_square),
        case!("osp.scasimir-projected", "osp-structure", "P±(S) = 2Ω_osp + 1/2 = 2S²", N::dim(1), osp::scasimir_projected),
        // projectors
        case!("projector.plus-membership", "projectors", "[X, P₊(a)] = [D, P₊(a)] = 0 for a ∈ Cent(sl2)", N::dim(1), osp::plus_membership),
        case!("projector.minus-membership", "projectors", "[X, P₋(a)] = [D, P₋(a)] = 0 for a ∈ Cent(sl2)", N::dim(1), osp::minus_membership),
        case!("projector.plus-minus-difference", "projectors", "P₋(a) = P₊(a) + [H, a]", N::dim(1), osp::plus_minus_difference),
        case!("projector.additive", "projectors", "P±(a + b) = P±(a) + P±(b)", N::dim(1), osp::additive),
        case!("projector.fixes-centralizer", "projectors", "P±(a) = a for a ∈ Cent(osp(1|2))", N::dim(1), osp::fixes_centralizer),
        case!("projector.central-factor", "projectors", "P±(ab) = P±(a)P±(b) when a or b is central", N::dim(1), osp::central_factor),
        case!("projector.central-sandwich", "projectors", "P±(abc) = a P±(b) c for central a, c", N::dim(1), osp::central_sandwich),
        case!("projector.sl2-extremal", "projectors", "[E±, P_α(a)] = [H, P_α(a)] = 0 for [H, a] = 0", N::dim(1), osp::sl2_extremal),
        case!("projector.gamma-single", "projectors", "P±(γ_v) = −2𝒪_v", N::dim(1), osp::gamma_single),
        case!("projector.gamma-chain.n2", "projectors", "P±(γ_{u_1}⋯γ_{u_n}) = (1−n)γ⋯ − 2Σ_j γ⋯𝒪_{u_j}⋯γ − 2Σ_{j<k}(−1)^{j+k−1}(u_jβ(u_k) − β(u_j)u_k)γ⋯", N::dim(2), osp::gamma_chain_2),
        case!("projector.gamma-chain.n3", "projectors", "P±(γ_{u_1}⋯γ_{u_n}) = (1−n)γ⋯ − 2Σ_j γ⋯𝒪_{u_j}⋯γ − 2Σ_{j<k}(−1)^{j+k−1}(u_jβ(u_k) − β(u_j)u_k)γ⋯", N::dim(3), osp::gamma_chain_3),
        case!("projector.gamma-chain.n4", "projectors", "P±(γ_{u_1}⋯γ_{u_n}) = (1−n)γ⋯ − 2Σ_j γ⋯𝒪_{u_j}⋯γ − 2Σ_{j<k}(−1)^{j+k−1}(u_jβ(u_k) − β(u_j)u_k)γ⋯", N::dim(4), osp::gamma_chain_4),
        case!("projector.gamma-pair", "projectors", "−P±(γ_uγ_v)/2 = O_uv − B(u,v)/2", N::dim(2), osp::gamma_pair),
        case!("projector.angular-momentum", "projectors", "P±(M_uv) = 2O_uv + 2𝒪_u𝒪_v − 2𝒪_v𝒪_u", N::dim(2), osp::angular_momentum),
        case!("projector.pin-reflection", "projectors", "P±(s) = −2𝒪_{α_s}ρ(s̃)/√B(α_s,α_s)", N::dim(1), osp::pin_reflection),
        // generalized symmetries
        case!("symmetry.q-minus", "generalized-symmetry", "[E⁻, a] = bD ⇒ D Q⁻(a) = (−1)^|a| (Q⁻(a) + a − (−1)^|a| X b) D", N::dim(1), osp::q_minus_symmetry),
        case!("symmetry.r-definition", "generalized-symmetry", "R_u = Q⁻(γ_u) = (H − 1)γ_u − Xβ(u)", N::dim(1), osp::r_definition),
        case!("symmetry.r-generalized", "generalized-symmetry", "D R_u + (R_u + γ_u) D = 0", N::dim(1), osp::r_generalized),
        // ambient superalgebra
        case!("algebra.cherednik-relation", "algebra", "[y, x] = ⟨y, x⟩ + Σ_s ⟨y, α_s⟩⟨α_s∨, x⟩ κ(s) s, [x, x'] = [y, y'] = 0", N::dim(1), algebra::cherednik_relation),
        case!("algebra.crossed-product", "algebra", "g u g⁻¹ = g(u), g γ_u g⁻¹ = γ_u", N::dim(1), algebra::crossed_product),
        case!("algebra.clifford-relation", "algebra", "γ_uγ_v + γ_vγ_u = 2B(u, v)", N::dim(1), algebra::clifford_relation),
        case!("algebra.superalgebra-relation", "algebra", "uv − (−1)^{|u||v|}vu = B(u,v)b(w,z) + ψ_κ^B(u,v)ω(w,z) on V*⊗𝒱", N::dim(1), algebra::superalgebra_relation),
        case!("algebra.dual-pairing", "algebra", "[β(u), v] = B(u, v) + ψ_κ^B(u, v) = [β(v), u]", N::dim(1), algebra::dual_pairing),
        case!("algebra.antisymmetrizer-expansion", "algebra", "𝒜(γ_uv) = γ_uv − B(u,v), 𝒜(γ_uvw), 𝒜(γ_uvwx) in terms of products", N::dim(1), algebra::antisymmetrizer_expansion),
        case!("algebra.antisymmetrizer-recursion", "algebra", "𝒜(γ_{u_1⋯u_n}) = (1/n) Σ_j (−1)^{j−1} γ_{u_j} 𝒜(γ_{⋯û_j⋯})", N::dim(1), algebra::antisymmetrizer_recursion),
        case!("algebra.orthogonal-quantization", "algebra", "𝒜(γ_{u_1⋯u_n}) = γ_{u_1}⋯γ_{u_n} for B-orthogonal u_j", N::dim(1), algebra::orthogonal_quantization),
        case!("algebra.so-adjoint", "algebra", "[γ_uγ_v/2, γ_w] = B(v,w)γ_u − B(u,w)γ_v", N::dim(1), algebra::so_adjoint),
        case!("algebra.chirality", "algebra", "Γ² = 1, Γγ_u = (−1)^{d−1}γ_uΓ", N::orthonormal(1), algebra::chirality),
        case!("algebra.pin-conjugation", "algebra", "ρ(g̃) a ρ(g̃)⁻¹ = (−1)^{|g̃||a|} g·a", N::dim(1), algebra::pin_conjugation),
        case!("algebra.o-frak-reflections", "algebra", "𝒪_u = Σ_s B(α_s,u)/√B(α_s,α_s) κ(s) ρ(s̃)", N::dim(1), algebra::o_frak_reflections),
        case!("algebra.o-frak-anticommutator", "algebra", "[γ_u, 𝒪_v] = [β(u), v] − B(u, v) = [γ_v, 𝒪_u]", N::dim(1), algebra::o_frak_anticommutator),
        case!("algebra.o-frak-chain.n2", "algebra", "𝒜(𝒪_{u_1}γ_{u_2⋯u_n}) = 𝒜(γ_{u_1}𝒪_{u_2}γ_{u_3⋯}) = ⋯ = 𝒜(γ_{u_1⋯u_{n−1}}𝒪_{u_n})", N::dim(2), algebra::o_frak_chain_2),
        case!("algebra.o-frak-chain.n3", "algebra", "𝒜(𝒪_{u_1}γ_{u_2⋯u_n}) = 𝒜(γ_{u_1}𝒪_{u_2}γ_{u_3⋯}) = ⋯ = 𝒜(γ_{u_1⋯u_{n−1}}𝒪_{u_n})", N::dim(3), algebra::o_frak_chain_3),
        case!("algebra.o-frak-chain.n4", "algebra", "𝒜(𝒪_{u_1}γ_{u_2⋯u_n}) = 𝒜(γ_{u_1}𝒪_{u_2}γ_{u_3⋯}) = ⋯ = 𝒜(γ_{u_1⋯u_{n−1}}𝒪_{u_n})", N::dim(4), algebra::o_frak_chain_4),
        case!("algebra.group-center", "algebra", "[Ω_κ, g] = [Ω_κ, γ_u] = 0", N::dim(1), algebra::group_center),
        // bilinear-form elements
        case!("pairing.values", "pairings", "(x⁺⊙x⁻)(B) = H, (x^±⊙x^±)(B) = ±2E±, (x⁺⊙γ)(B) = X, (x⁻⊙γ)(B) = D, (γ⊙γ)(B) = 0, (w⊙z) = (−1)^{|w||z|}(z⊙w)", N::dim(1), pairings::values),
        case!("pairing.normal-ordered", "pairings", "(w⊙z)(B) = Σ (v_p*⊗w) B_pq (v_q*⊗z) − b(w,z)d/2 − ω(w,z)Ω_κ", N::dim(1), pairings::normal_ordered),
        case!("pairing.pin-invariance", "pairings", "[(w⊙z)(B), ρ(s̃)] = 0", N::dim(1), pairings::pin_invariance),
        case!("pairing.adjoint-even", "pairings", "[(ξ₁⊙ξ₂)(B), u⊗η] = b(ξ₂,η) u⊗ξ₁ + b(ξ₁,η) u⊗ξ₂", N::dim(1), pairings::adjoint_even),
        case!("pairing.adjoint-odd", "pairings", "[(ξ₁⊙γ)(B), u⊗η] = b(γ,η) u⊗ξ₁ + b(ξ₁,η)(u⊗γ + 2𝒪_u)", N::dim(1), pairings::adjoint_odd),
        case!("pairing.sl2-on-vectors", "pairings", "[(x⁻⊙x⁻)(B), v⁺] = 2β(v⁺), [(x⁺⊙x⁺)(B), v⁻] = −2β(v⁻), [(x⁺⊙x⁻)(B), v^±] = ±v^±", N::dim(1), pairings::sl2_on_vectors),
        case!("pairing.o-frak-adjoint", "pairings", "𝒪_u = ([D, u] − γ_u)/2", N::dim(1), pairings::o_frak_adjoint),
        case!("pairing.o-frak-trace", "pairings", "Σ 𝒪_{v_p*} B_pq γ_{v_q*} = Ω_κ = Σ γ_{v_p*} B_pq 𝒪_{v_q*}", N::dim(1), pairings::o_frak_trace),
        case!("pairing.structure-constants", "pairings", "[(z₁⊙z₂), (z₃⊙z₄)] = (w₁⊙z₄) + (−1)^{(|z₁|+|z₂|)|z₃|}(z₃⊙w₂)", N::dim(1), pairings::structure_constants),
        // centralizer of sl(2)
        case!("sl2.angular-momentum-forms", "sl2-centralizer", "M(u,v) = (uβ(v) − β(u)v − vβ(u) + β(v)u)/2 = β(v)u − β(u)v", N::dim(2), centralizer::angular_momentum_forms),
        case!("sl2.centralizer-generators", "sl2-centralizer", "[H, a] = [E±, a] = 0 for a ∈ {M(u,v), g, γ_u}", N::dim(1), centralizer::sl2_generators),
        case!("sl2.angular-momentum-brackets", "sl2-centralizer", "[M(u,v), M(x,y)] = M(v,x)B_κ(u,y) − M(u,x)B_κ(v,y) − M(v,y)B_κ(u,x) + M(u,y)B_κ(v,x)", N::dim(2), centralizer::angular_momentum_brackets),
        case!("sl2.pairing-symmetries", "sl2-centralizer", "[[x*, u], v] = [[x*, v], u], [[x*, v], y*] = [[y*, v], x*]", N::dim(1), centralizer::pairing_symmetries),
        // supercentralizer
        case!("centralizer.membership.n1", "centralizer-membership", "[X, O_u] = [D, O_u] = 0", N::dim(1), centralizer::membership_1),
        case!("centralizer.membership.n2", "centralizer-membership", "[X, O_{u_1u_2}] = [D, O_{u_1u_2}] = 0", N::dim(2), centralizer::membership_2),
        case!("centralizer.membership.n3", "centralizer-membership", "[X, O_{u_1u_2u_3}] = [D, O_{u_1u_2u_3}] = 0", N::dim(3), centralizer::membership_3),
        case!("centralizer.membership.n4", "centralizer-membership", "[X, O_{u_1⋯u_4}] = [D, O_{u_1⋯u_4}] = 0", N::dim(4), centralizer::membership_4),
        case!("centralizer.membership-isotropic", "centralizer-membership", "[X, O] = [D, O] = 0 on isotropic basis indices", N::orthonormal(2), centralizer::membership_isotropic),
        case!("centralizer.skew-symmetry", "centralizer-membership", "O is skew-symmetric and multilinear in its indices", N::dim(2), centralizer::skew_symmetry),
        case!("routes.n1", "route-agreement", "O_u by projector = explicit forms = 𝒪_u", N::dim(1), centralizer::routes_1),
        case!("routes.n2", "route-agreement", "O_{u_1u_2} by P₊ = by P₋ = first explicit form = second explicit form", N::dim(2), centralizer::routes_2),
        case!("routes.n3", "route-agreement", "O_{u_1u_2u_3} by P₊ = by P₋ = first explicit form = second explicit form", N::dim(3), centralizer::routes_3),
        case!("routes.n4", "route-agreement", "O_{u_1⋯u_4} by P₊ = by P₋ = first explicit form = second explicit form", N::dim(4), centralizer::routes_4),
        case!("routes.two-index", "route-agreement", "O_uv = uβ(v) − β(u)v + (γ_uγ_v + B)/2 + 𝒪_uγ_v + γ_u𝒪_v = uβ(v) − vβ(u) + (γ_uγ_v − B)/2 + 𝒪_uγ_v − 𝒪_vγ_u = 𝒜(γ_uv)/2 + 2𝒜(O_uγ_v) + M_uv", N::dim(2), centralizer::routes_two_index),
        case!("routes.three-index", "route-agreement", "O_uvw = 𝒜(γ_uvw) + M(v,w)γ_u − M(u,w)γ_v + M(u,v)γ_w + 𝒪_u𝒜(γ_vw) − 𝒪_v𝒜(γ_uw) + 𝒪_w𝒜(γ_uv)", N::dim(3), centralizer::routes_three_index),
        case!("structure.group-action", "centralizer-structure", "ρ(s̃) O_{u_1⋯u_n} = (−1)^n O_{s·u_1⋯s·u_n} ρ(s̃)", N::dim(1), centralizer::group_action),
        case!("structure.pair-chain.n3", "centralizer-structure", "𝒜(O_{u_1u_2}γ_{u_3⋯u_n}) = 𝒜(γ_{u_1}O_{u_2u_3}γ_{u_4⋯}) = ⋯ = 𝒜(γ_{u_1⋯u_{n−2}}O_{u_{n−1}u_n})", N::dim(3), centralizer::pair_chain_3),
        case!("structure.pair-chain.n4", "centralizer-structure", "𝒜(O_{u_1u_2}γ_{u_3⋯u_n}) = 𝒜(γ_{u_1}O_{u_2u_3}γ_{u_4⋯}) = ⋯ = 𝒜(γ_{u_1⋯u_{n−2}}O_{u_{n−1}u_n})", N::dim(4), centralizer::pair_chain_4),
        case!("structure.recursion.n3", "centralizer-structure", "(n−3)O_{u_1⋯u_n} = −4(n−2)𝒜(O_{u_1}O_{u_2⋯u_n}) + 2(n−1)𝒜(O_{u_1u_2}O_{u_3⋯u_n})", N::dim(3), centralizer::recursion_3),
        case!("structure.recursion.n4", "centralizer-structure", "(n−3)O_{u_1⋯u_n} = −4(n−2)𝒜(O_{u_1}O_{u_2⋯u_n}) + 2(n−1)𝒜(O_{u_1u_2}O_{u_3⋯u_n})", N::dim(4), centralizer::recursion_4),
        case!("structure.closed-form.n4", "centralizer-structure", "O_{u_1⋯u_4} = 6𝒜(O_{u_1u_2}O_{u_3u_4}) − 8𝒜(O_{u_1u_2u_3}O_{u_4})", N::dim(4), centralizer::closed_form_4),
        case!("structure.closed-form.n5", "centralizer-structure", "O_{u_1⋯u_5} = 4𝒜(O_{u_1u_2u_3}O_{u_4u_5}) + 48𝒜(O_{u_1u_2u_3}O_{u_4}O_{u_5}) − 36𝒜(O_{u_1u_2}O_{u_3u_4}O_{u_5})", N::dim(5), centralizer::closed_form_5),
        // relations
        case!("relations.single-vs-rest.n2", "relations", "𝒜(O_{u_1}O_{u_2⋯u_n}) = 𝒜(O_{u_1⋯u_{n−1}}O_{u_n}), 𝒜([O_{u_1}, O_{u_2⋯u_n}]) = 0", N::dim(2), relations::single_vs_rest_2),
        case!("relations.single-vs-rest.n3", "relations", "𝒜(O_{u_1}O_{u_2⋯u_n}) = 𝒜(O_{u_1⋯u_{n−1}}O_{u_n}), 𝒜([O_{u_1}, O_{u_2⋯u_n}]) = 0", N::dim(3), relations::single_vs_rest_3),
        case!("relations.single-vs-rest.n4", "relations", "𝒜(O_{u_1}O_{u_2⋯u_n}) = 𝒜(O_{u_1⋯u_{n−1}}O_{u_n}), 𝒜([O_{u_1}, O_{u_2⋯u_n}]) = 0", N::dim(4), relations::single_vs_rest_4),
        case!("relations.single-vs-rest.n5", "relations", "𝒜(O_{u_1}O_{u_2⋯u_n}) = 𝒜(O_{u_1⋯u_{n−1}}O_{u_n}), 𝒜([O_{u_1}, O_{u_2⋯u_n}]) = 0", N::dim(5), relations::single_vs_rest_5),
        case!("relations.pair-vs-rest.n3", "relations", "𝒜(O_{u_1u_2}O_{u_3⋯u_n}) = 𝒜(O_{u_1⋯u_{n−2}}O_{u_{n−1}u_n}), 𝒜([O_{u_1u_2}, O_{u_3⋯u_n}]) = 0", N::dim(3), relations::pair_vs_rest_3),
        case!("relations.pair-vs-rest.n4", "relations", "𝒜(O_{u_1u_2}O_{u_3⋯u_n}) = 𝒜(O_{u_1⋯u_{n−2}}O_{u_{n−1}u_n}), 𝒜([O_{u_1u_2}, O_{u_3⋯u_n}]) = 0", N::dim(4), relations::pair_vs_rest_4),
        case!("relations.pair-vs-rest.n5", "relations", "𝒜(O_{u_1u_2}O_{u_3⋯u_n}) = 𝒜(O_{u_1⋯u_{n−2}}O_{u_{n−1}u_n}), 𝒜([O_{u_1u_2}, O_{u_3⋯u_n}]) = 0", N::dim(5), relations::pair_vs_rest_5),
        case!("relations.two-index-cyclic", "relations", "[O_uv, O_w] − [O_uw, O_v] + [O_vw, O_u] = 0", N::dim(2), relations::two_index_cyclic),
        case!("relations.three-index-cyclic", "relations", "[O_uvw, O_z] − [O_uvz, O_w] + [O_uwz, O_v] − [O_vwz, O_u] = 0", N::dim(3), relations::three_index_cyclic),
        case!("relations.antisym-pair-product", "relations", "𝒜(O_{u_1u_2}O_{u_3u_4}) = 𝒜({O_{u_1u_2}, O_{u_3u_4}})/2", N::dim(4), relations::antisym_pair_product),
        case!("relations.pair-pair-bracket", "relations", "[O_ab, O_uv] = O_ûv + {O_û, O_v} + [O_abu, O_v] + O_uv̂ + {O_u, O_v̂} − [O_abv, O_u], with x̂ = B(b,x)a − B(a,x)b", N::dim(2), relations::pair_pair_bracket),
        case!("relations.pair-triple-bracket", "relations", "[O_ab, O_uvw] = O_ûvw + O_uv̂w + O_uvŵ + {O_û, O_vw} − {O_v̂, O_uw} + {O_ŵ, O_uv} + [O_a, O_buvw] − [O_b, O_auvw]", N::dim(3), relations::pair_triple_bracket),
        case!("relations.pair-quadruple-bracket", "relations", "[O_ab, O_cuvw] = O_ĉuvw + O_cûvw + O_cuv̂w + O_cuvŵ + {O_ĉ, O_uvw} + {O_û, O_cvw} + {O_v̂, O_cuw} + {O_ŵ, O_cuv} + [O_a, O_bcuvw] − [O_b, O_acuvw]", N::dim(4), relations::pair_quadruple_bracket),
        case!("relations.triple-triple-anticommutator", "relations", "[O_abc, O_uvw] with only B(a,u), B(b,v), B(c,w) nonzero between the triples", N::dim(6), relations::triple_triple),
        case!("squares.subset.n1", "squares", "(O_A)² = (−1)^{n(n−1)/2}((n−1)(n−2)/8 − (n−2)Σ_a O_a² − Σ_{a<b} O_ab²)", N::orthonormal(1), relations::square_1),
        case!("squares.subset.n2", "squares", "(O_A)² = (−1)^{n(n−1)/2}((n−1)(n−2)/8 − (n−2)Σ_a O_a² − Σ_{a<b} O_ab²)", N::orthonormal(2), relations::square_2),
        case!("squares.subset.n3", "squares", "(O_A)² = (−1)^{n(n−1)/2}((n−1)(n−2)/8 − (n−2)Σ_a O_a² − Σ_{a<b} O_ab²)", N::orthonormal(3), relations::square_3),
        case!("squares.subset.n4", "squares", "(O_A)² = (−1)^{n(n−1)/2}((n−1)(n−2)/8 − (n−2)Σ_a O_a² − Σ_{a<b} O_ab²)", N::orthonormal(4), relations::square_4),
        case!("center.top-signs", "center", "{O_{1⋯d}, O_u} = 0, [O_{1⋯d}, O_uv] = 0, {O_{1⋯d}, O_uvw} = 0", N::orthonormal(1), relations::top_signs),
        case!("center.top-formula", "center", "O_{1⋯d} = (F⁻F⁺ − F⁺F⁻ − 1/2) e_{1⋯d}", N::orthonormal(1), relations::top_formula),
        case!("center.top-square", "center", "(O_{1⋯d})² = (−1)^{d(d−1)/2}((d−1)(d−2)/8 − Ω)", N::orthonormal(1), relations::top_square),
        case!("center.omega-central", "center", "[Ω, t] = 0 for t ∈ {O_j, O_jk, O_jkl, ρ(s̃)}, Ω = (d−2)Σ_j O_j² + Σ_{j<k} O_jk²", N::orthonormal(1), relations::omega_central),
        // distinct orthonormal basis indices
        case!("basis.pair-pair-overlap", "orthonormal-basis", "[O_ij, O_ki] = O_jk + O_jO_k − O_kO_j + [O_ijk, O_i]", N::orthonormal(3), corollary::pair_pair_overlap),
        case!("basis.pair-pair-disjoint", "orthonormal-basis", "[O_ij, O_kl] = ([O_i, O_jkl] − [O_j, O_ikl] − [O_ijl, O_k] + [O_ijk, O_l])/2 = [O_i, O_jkl] − [O_j, O_ikl]", N::orthonormal(4), corollary::pair_pair_disjoint),
        case!("basis.pair-triple-disjoint", "orthonormal-basis", "[O_jk, O_lmn] = [O_j, O_klmn] − [O_k, O_jlmn]", N::orthonormal(5), corollary::pair_triple_disjoint),
        case!("basis.pair-triple-overlap-one", "orthonormal-basis", "[O_jk, O_jlm] = −O_klm − {O_k, O_lm} − [O_j, O_jklm]", N::orthonormal(4), corollary::pair_triple_overlap_one),
        case!("basis.pair-triple-overlap-two", "orthonormal-basis", "[O_jk, O_jkl] = −{O_j, O_jl} − {O_k, O_kl}", N::orthonormal(3), corollary::pair_triple_overlap_two),
        case!("basis.triple-square", "orthonormal-basis", "[O_ijk, O_ijk] = 2(O_i² + O_j² + O_k² + O_ij² + O_ik² + O_jk²) − 1/2", N::orthonormal(3), corollary::triple_square),
        case!("basis.triple-square-expanded", "orthonormal-basis", "(O_abc)² = −1/4 + O_a² + O_b² + O_c² + O_ab² + O_ac² + O_bc²", N::orthonormal(3), corollary::triple_square_expanded),
        case!("basis.triple-overlap-two", "orthonormal-basis", "[O_ijk, O_ijl] = [O_k, O_l] + {O_ik, O_il} + {O_jk, O_jl}", N::orthonormal(4), corollary::triple_overlap_two),
        case!("basis.triple-overlap-one", "orthonormal-basis", "[O_ijk, O_imn] = O_jkmn + {O_jk, O_mn} + [O_i, O_ijkmn]", N::orthonormal(5), corollary::triple_overlap_one),
        case!("basis.triple-disjoint", "orthonormal-basis", "[O_ijk, O_lmn] = [O_i, O_jklmn] − [O_j, O_iklmn] + [O_k, O_ijlmn]", N::orthonormal(6), corollary::triple_disjoint),
        case!("basis.pair-quadruple-overlap-two", "orthonormal-basis", "[O_jk, O_jklm] = −{O_j, O_jlm} − {O_k, O_klm}", N::orthonormal(4), corollary::pair_quadruple_overlap_two),
        case!("basis.pair-quadruple-overlap-one", "orthonormal-basis", "[O_jk, O_jlmn] = −O_klmn − {O_k, O_lmn} − [O_j, O_jklmn]", N::orthonormal(5), corollary::pair_quadruple_overlap_one),
        case!("basis.pair-quadruple-disjoint", "orthonormal-basis", "[O_ij, O_klmn] = [O_i, O_jklmn] − [O_j, O_iklmn]", N::orthonormal(6), corollary::pair_quadruple_disjoint),
        case!("basis.triple-graded-overlap-two", "orthonormal-basis", "{O_jkl, O_jkm} = −O_lm − {O_l, O_m} + {O_jk, O_jklm}", N::orthonormal(4), corollary::triple_graded_overlap_two),
        case!("basis.triple-graded-overlap-one", "orthonormal-basis", "{O_jkl, O_jmn} = −{O_j, O_jklmn} − {O_jk, O_jlmn} + {O_jl, O_jkmn}", N::orthonormal(5), corollary::triple_graded_overlap_one),
    ]
}

/// `(−1)^n`.
pub(crate) fn parity_sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Run `f` once with `P₊` and once with `P₋`.
pub(crate) fn each_projector(e: &Env, mut f: impl FnMut(&dyn Fn(&Expr) -> Expr)) {
    f(&|a| e.p_plus(a));
    f(&|a| e.p_minus(a));
}

/// Cases belonging to a suite, or all cases for `"all"`.
pub fn cases_for(suite: &str) -> Option<Vec<IdentityCase>> {
    if suite == "all" {
        return Some(catalog());
    }
    if !SUITES.iter().any(|(s, _)| *s == suite) {
        return None;
    }
    Some(catalog().into_iter().filter(|c| c.suite == suite).collect())
}

/// Look a single case up by id.
pub fn case(id: &str) -> Option<IdentityCase> {
    catalog().into_iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_suites_known() {
        let cat = catalog();
        let mut ids: Vec<&str> = cat.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
        for c in &cat {
            assert!(SUITES.iter().any(|(s, _)| *s == c.suite), "{}", c.id);
        }
        for (s, _) in SUITES {
            assert!(cat.iter().any(|c| c.suite == *s), "{s} is empty");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(cases_for("nope").is_none());
        assert_eq!(cases_for("osp-relations").unwrap().len(), 6);
        assert_eq!(cases_for("all").unwrap().len(), catalog().len());
    }
}
