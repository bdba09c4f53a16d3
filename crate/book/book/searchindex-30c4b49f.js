window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","introduction.html#what-the-crate-does","introduction.html#a-complete-example","family.html#the-family-model","family.html#normalization","family.html#the-α-vector","family.html#two-structural-assumptions","family.html#smoothness-scanning","characters.html#fields-characters-and-gauss-sums","characters.html#finite-field-towers","characters.html#multiplicative-characters-and-gauss-sums","characters.html#the-two-lifting-identities","hypergeometric.html#hypergeometric-sums-over-finite-fields","hypergeometric.html#the-transform","hypergeometric.html#reduction-of-common-parameters","hypergeometric.html#the-multi-variable-transform-identity","hypergeometric.html#pure-weight","counting.html#counting-points-three-oracles","counting.html#brute-force","counting.html#stratified-character-sums","counting.html#the-hypergeometric-prediction","counting.html#the-star-identity","zeta.html#assembling-the-zeta-factor","zeta.html#from-counts-to-pt","zeta.html#weight-classification","zeta.html#what-gets-discarded-and-why-that-is-safe","zeta.html#cross-checking-against-raw-counts","unit-roots.html#unit-roots-and-ordinarity","unit-roots.html#the-deformation-series","unit-roots.html#log-coefficient-closed-forms","unit-roots.html#cross-checks-against-pt","cli.html#the-command-line-interface","cli.html#configuration","cli.html#exit-codes","cli.html#example-session"],"index":{"documentStore":{"docInfo":{"0":{"body":105,"breadcrumbs":2,"title":1},"1":{"body":83,"breadcrumbs":2,"title":1},"10":{"body":75,"breadcrumbs":8,"title":4},"11":{"body":102,"breadcrumbs":7,"title":3},"12":{"body":0,"breadcrumbs":10,"title":5},"13":{"body":67,"breadcrumbs":6,"title":1},"14":{"body":143,"breadcrumbs":8,"title":3},"15":{"body":89,"breadcrumbs":9,"title":4},"16":{"body":47,"breadcrumbs":7,"title":2},"17":{"body":23,"breadcrumbs":8,"title":4},"18":{"body":43,"breadcrumbs":6,"title":2},"19":{"body":58,"breadcrumbs":7,"title":3},"2":{"body":179,"breadcrumbs":3,"title":2},"20":{"body":105,"breadcrumbs":6,"title":2},"21":{"body":61,"breadcrumbs":6,"title":2},"22":{"body":0,"breadcrumbs":6,"title":3},"23":{"body":128,"breadcrumbs":5,"title":2},"24":{"body":36,"breadcrumbs":5,"title":2},"25":{"body":52,"breadcrumbs":6,"title":3},"26":{"body":53,"breadcrumbs":8,"title":5},"27":{"body":48,"breadcrumbs":6,"title":3},"28":{"body":105,"breadcrumbs":5,"title":2},"29":{"body":73,"breadcrumbs":7,"title":4},"3":{"body":19,"breadcrumbs":4,"title":2},"30":{"body":83,"breadcrumbs":7,"title":4},"31":{"body":103,"breadcrumbs":6,"title":3},"32":{"body":96,"breadcrumbs":4,"title":1},"33":{"body":39,"breadcrumbs":5,"title":2},"34":{"body":66,"breadcrumbs":5,"title":2},"4":{"body":41,"breadcrumbs":3,"title":1},"5":{"body":51,"breadcrumbs":3,"title":1},"6":{"body":118,"breadcrumbs":5,"title":3},"7":{"body":61,"breadcrumbs":4,"title":2},"8":{"body":0,"breadcrumbs":8,"title":4},"9":{"body":80,"breadcrumbs":7,"title":3}},"docs":{"0":{"body":"hgzeta computes the zeta functions of a classical family of hypersurfaces\\nby two entirely independent routes and insists that they agree. The family is a monomial deformation of a Fermat-type hypersurface: F_λ(T) = c₁·T^{a₁} + … + c_{n+1}·T^{a_{n+1}} − λ·T₁⋯T_{n+1} Each a_i is a column of nonnegative exponents summing to n+1, so every X_λ = {F_λ = 0} ⊂ Pⁿ is a degree- (n+1) hypersurface over a finite field F_q, and λ moves it through a one-parameter pencil anchored at the\\ndiagonal monomials. Counting points of X_λ over every extension F_{q^r} determines the zeta\\nfunction Z(X_λ, T) = exp( Σ_r #X_λ(F_{q^r}) · T^r / r ), a rational function whose interesting part is a single polynomial factor P(T) carrying the middle cohomology. The library’s central claim — checked,\\nnot assumed — is that P(T) factors through hypergeometric character sums:\\na short list of spectral pieces, each contributing a Gauss-sum prefactor\\nand a finite-field hypergeometric value evaluated at the pencil coordinate C·λ^{−α}.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"Validates the family: normalizes the exponent matrix, extracts the\\nkernel vector α = (α₁, …, α_{n+1}; α), and checks the two structural\\ndivisibility assumptions that make the spectral decomposition exist over F_q. Counts points three ways: brute-force enumeration of projective\\nrepresentatives, a stratified character-sum count, and the hypergeometric\\nprediction. All three must produce the same integers. Assembles P(T) from exact geometric ledgers plus exponential fits\\nacross the extension tower, verifies its coefficients are integers, and\\nclassifies the absolute values of its reciprocal roots into weights. Decides ordinarity of each fiber with a p-adic criterion (a truncated\\ndeformation series evaluated at λ^{−α}) and, in the ordinary case,\\ncomputes the unit root of P to a requested p-adic precision, then checks\\nit against P(T) itself.","breadcrumbs":"Introduction » What the crate does","id":"1","title":"What the crate does"},"10":{"body":"[ chargauss::CharTable] fixes the generator g of F_{q^r}^× and encodes\\nevery multiplicative character as ρ^k, where ρ(g) = e^{2πi/m}. Values\\nlive in [ algval::AlgValue], complex numbers at 256-bit precision — enough\\nthat exact integer identities survive as residuals below 1e-30 even after\\nthe millions of floating operations in a level-6 count. The Gauss sum is G(ρ^k) = Σ_{x ≠ 0} ρ^k(x) · θ(x), with G(ε) = −1 for the trivial character. Three classical facts are used\\nconstantly and are pinned by tests: |G(χ)|² = q^r for nontrivial χ; G(χ)·G(χ⁻¹) = χ(−1)·q^r (reflection); χ(0) = 0 for every character, including the trivial one — this\\nconvention makes the torus stratification below come out without special\\ncases.","breadcrumbs":"Fields, characters, and Gauss sums » Multiplicative characters and Gauss sums","id":"10","title":"Multiplicative characters and Gauss sums"},"11":{"body":"The factorization rests on two identities relating Gauss sums at different\\nlevels and orders, both available as checkable value pairs: Tower lift ( dh_lift_check): for χ at level 1 with lift χ_r, −G(χ_r) = (−G(χ))^r. This is what lets a single level-1 spectral piece predict counts at all\\nlevels: its Gauss-sum prefactor B_j simply gets raised to the r-th\\npower. Product relation ( dh_multiplication): for β | m, G(χ^β) = G(χ) · ∏_{s=1}^{β−1} [ G(χφ^s) / G(φ^s) ] · χ(β^β), where φ has exact order β. This converts a Gauss sum at a multiplied\\ncharacter index into a product over the φ-orbit — the mechanism that\\nturns the kernel sum over (Z/(q−1))^{n+1} into hypergeometric sums whose\\nparameters are φ-orbits (see the next chapter). Note the sign: in this\\nnormalization there is no leading (−1)^{β−1} factor; all such signs are\\ncarried explicitly by the −G combinations in the identities that consume\\nit. [ chargauss::CharTower] builds the level tables lazily and shares them\\n( Arc) across worker threads during λ sweeps.","breadcrumbs":"Fields, characters, and Gauss sums » The two lifting identities","id":"11","title":"The two lifting identities"},"12":{"body":"","breadcrumbs":"Hypergeometric sums over finite fields » Hypergeometric sums over finite fields","id":"12","title":"Hypergeometric sums over finite fields"},"13":{"body":"For upper parameters A = (A₁, …, A_m) and lower parameters B = (B₁, …, B_k) (all multiplicative characters of F_{q^r}), the library\\nevaluates H(A; B; x) = (1/(q^r−1)) · Σ_χ ∏_i G(A_i·χ)/G(A_i) · ∏_i G((B_i·χ)^{−1})/G(B_i^{−1}) · χ((−1)^m · x), summing over all q^r − 1 characters χ ([ hgff::tghf]). Two conventions\\nto keep in mind: H(A; B; 0) = 0 — the transform vanishes at the origin because χ(0) = 0\\nfor every χ; [ hgff::ghf] is the classical normalization: it appends the trivial\\ncharacter ε to the lower list before evaluating. Parameters are index lists ( ParamList), so lifting to level r is the\\nindex scaling k ↦ k·(q^r−1)/(q−1) described in the previous chapter.","breadcrumbs":"Hypergeometric sums over finite fields » The transform","id":"13","title":"The transform"},"14":{"body":"In classical hypergeometric series a common upper/lower parameter cancels.\\nOver finite fields the cancellation leaves a residue: removing one common\\npair (P, P) relates the two transforms by an exact affine correction of\\nthe form H_full(x) = q^{r} · H_reduced(x) + (explicit Gauss-sum terms), whose exact shape depends on whether P is trivial and whether other\\nparameters collide with it. [ hgff::reduce_params] removes common pairs as\\nmultisets, [ hgff::reduction_ledger] records the accumulated correction\\nterms (the ledger), and [ hgff::tghf_via_reduction] replays the ledger to\\nreconstruct the unreduced value. This is doc-tested: #![allow(unused)] fn main() {\\nuse hgzeta::chargauss::CharTower;\\nuse hgzeta::hgff::{tghf, tghf_via_reduction, ParamList}; let tower = CharTower::new(7, 1, 1, 256);\\nlet tbl = tower.level(1)?;\\n// One common parameter (4) between the upper and lower lists.\\nlet params = ParamList::new(vec![1, 4], vec![0, 4]);\\nfor x in tbl.field.units() { let full = tghf(&tbl, &params, x); let corrected = tghf_via_reduction(&tbl, &params, x); assert!(full.dist(&corrected).to_f64() < 1e-30);\\n} Ok::<(), hgzeta::Error>(()) } The ledger is not an implementation detail: the reduced transform is the\\npure-weight object whose values enter P(T), while the ledger terms are\\nexactly the lower-weight contributions that the zeta assembly must place in\\nother cohomological degrees. Keeping them as exact expressions (rather than\\nnumerically fitted ones) is what makes the point-count prediction an integer\\nidentity instead of an approximation.","breadcrumbs":"Hypergeometric sums over finite fields » Reduction of common parameters","id":"14","title":"Reduction of common parameters"},"15":{"body":"The bridge between the kernel sum over character tuples and a hypergeometric\\nvalue in one variable is the identity computed by\\n[ hgff::multi_hyper_sides]: for positive integers α_i with sum α, all\\ndividing q − 1, Σ_χ ∏_i G((A_i·χ)^{−α_i}) · G((B·χ)^α) · χ((−1)^α · x) = (q−1) · ∏_i A_i(α_i^{−α_i}) · B(α^α) · ∏_i { G(A_i^{−1}) ∏_s G(A_i^{−1}φ_{α_i}^s)/G(φ_{α_i}^s) } · G(B) ∏_s G(B·φ_α^s)/G(φ_α^s) · H( B[φ_α] ; A₁[φ_{α₁}], …, A_{n+1}[φ_{α_{n+1}}] ; α^α ∏_i α_i^{−α_i} · x ), where X[φ_β] denotes the orbit list {X·φ_β^s}. The function returns both\\nsides so tests can measure their distance; the acceptance suite drives it\\nwith 50 random parameter tuples at q ∈ {7, 13} and tolerance 1e-30. Applied to a spectral piece, the A_i and B become the coset data ρ^{t_ij} and ρ^{t_j}, and the argument specializes to C·λ^{−α} — which\\nis exactly how the constant C of the family chapter arises.","breadcrumbs":"Hypergeometric sums over finite fields » The multi-variable transform identity","id":"15","title":"The multi-variable transform identity"},"16":{"body":"For disjoint parameter lists of equal arity, the normalized combination r ↦ ∏_i G(A_i)·G(B_i) · H(A; B; x^{−1}) (at level r) ([ hgff::sheaf_trace]) is a power sum of algebraic numbers that are pure:\\neach has absolute value q^{(2·arity−1)/2}, for x ∉ {0, 1}. The test suite\\nverifies this by fitting exponentials across levels 1–4 and checking every\\nbase magnitude. Purity is the reason weight classification of the zeta factor\\n(chapter 5) is possible at all.","breadcrumbs":"Hypergeometric sums over finite fields » Pure weight","id":"16","title":"Pure weight"},"17":{"body":"Every claim the library makes is anchored to point counts that can be\\ncomputed three independent ways. A disagreement anywhere is a bug (or a\\nviolated assumption), never a tolerance issue: all three oracles produce\\nexact integers.","breadcrumbs":"Counting points: three oracles » Counting points: three oracles","id":"17","title":"Counting points: three oracles"},"18":{"body":"[ count::brute_count] enumerates projective representatives (first nonzero\\ncoordinate normalized to 1) of Pⁿ(F_{q^r}) and evaluates F_λ at each.\\nCost is Θ(q^{rn}) field operations, guarded by an explicit budget\\n( Error::BudgetExceeded, CLI exit code 5). It reports counts stratified by\\nthe support set J of nonzero coordinates — the same stratification the\\ncharacter-sum oracle uses, so the two can be compared stratum by stratum.","breadcrumbs":"Counting points: three oracles » Brute force","id":"18","title":"Brute force"},"19":{"body":"[ count::delsarte_full_count] counts solutions with prescribed support\\ndirectly from characters: on the torus stratum T_J, the number of\\nsolutions of the monomial system is a sum of products of Gauss sums over the\\nkernel of the exponent matrix restricted to J, taken modulo q^r − 1.\\nThis is the second exact oracle; it needs only the level- r character table\\nand small integer linear algebra ( intlin::kernel_mod), so it reaches levels\\nwhere enumeration is hopeless (e.g. q = 73, r = 2, a field of 5329\\nelements with ~28 million projective points, in about a second).","breadcrumbs":"Counting points: three oracles » Stratified character sums","id":"19","title":"Stratified character sums"},"2":{"body":"The following program is the crate-level doc-test ( cargo test --doc runs\\nit verbatim). It treats the deformed cubic x³ + y³ + z³ − λ·xyz over F_7: #![allow(unused)] fn main() {\\nuse hgzeta::chargauss::CharTower;\\nuse hgzeta::count::brute_count;\\nuse hgzeta::family::FamilySpec;\\nuse hgzeta::intlin::IntMatrix;\\nuse hgzeta::padic::{unit_root, PadicCtx};\\nuse hgzeta::zetafac::{assemble_p, build_pieces, compute_u_terms, predicted_count};\\nuse rug::Integer; // x³ + y³ + z³ − λ·xyz in P² over F_7, with exponent vectors as columns.\\nlet mut a = IntMatrix::zero(3, 3);\\nfor i in 0..3 { a.set(i, i, Integer::from(3));\\n}\\nlet spec = FamilySpec::new(2, 7, 1, a, &[1, 1, 1])?;\\nassert_eq!(spec.alpha.alphas, vec![1, 1, 1]); let lam = spec.lambda_from_int(2);\\nassert!(spec.lambda_admissible(lam)); // Hypergeometric prediction vs. exhaustive count over F_7 and F_49.\\nlet tower = CharTower::new(7, 1, 6, 256);\\nlet tbl1 = tower.level(1)?;\\nlet pieces = build_pieces(&spec, lam, &tbl1)?;\\nlet u_terms = compute_u_terms(&spec, lam, &pieces, &tbl1);\\nfor r in 1..=2 { let tbl_r = tower.level(r)?; let predicted = predicted_count(&spec, lam, &pieces, &u_terms, &tbl_r)?; let brute = brute_count(&spec, lam, r, 1_000_000)?.total; assert_eq!(predicted, brute);\\n} // The middle factor of the zeta function: 1 + T + 7T² here.\\nlet p_factor = assemble_p(&spec, lam, &tower, 6)?;\\nassert_eq!(p_factor.coefficients, vec![1, 1, 7]); // The fiber is ordinary, so P has a p-adic unit reciprocal root.\\nlet ctx = PadicCtx::new(&spec.field, 4);\\nassert!(unit_root(&spec, &ctx, lam)?.is_some()); Ok::<(), hgzeta::Error>(()) } The remaining chapters walk through each layer: the family model and its\\nstructural assumptions, the character/Gauss-sum machinery, the\\nhypergeometric transform and its reduction calculus, the three counting\\noracles, the assembly and weight classification of P(T), and the p-adic\\nunit-root computation. The final chapter documents the hgzeta CLI.","breadcrumbs":"Introduction » A complete example","id":"2","title":"A complete example"},"20":{"body":"[ zetafac::build_pieces] constructs the spectral pieces at level 1. Each\\npiece j carries: the kernel coset representative s_j and its folded data t_{ij} = s_{ij}/α_i, t_j = |s_j|/α; the Gauss-sum prefactor B_j (a product of −G factors and character\\nvalues of the coefficients and of −λ), which lifts to level r as B_j^r by the tower-lift identity; full hypergeometric parameter lists (the φ-orbits of ρ^{t_j} over ρ^{t_{ij}}), plus their reduced form and the reduction ledger; the weight of B_j (from how many s_{ij} are nonzero and whether |s_j| ≡ 0 mod q−1). [ zetafac::predicted_count] then evaluates #X_λ(F_{q^r}) = Σ_{i<n} q^{ri} + u_r + (−1)ⁿ Σ_j B_j^r · F(j)_r, where F(j)_r is the reduced transform at level r (scaled by the\\nappropriate power of q^r from the ledger) and u_r is an exact ledger of\\nlower-weight terms ([ zetafac::compute_u_terms]) assembled from the\\nreduction corrections across all strata. The result is rounded with a gap\\ncheck: if the float is not within 1e-10 of an integer, the computation\\naborts rather than report a plausible count.","breadcrumbs":"Counting points: three oracles » The hypergeometric prediction","id":"20","title":"The hypergeometric prediction"},"21":{"body":"The sharpest internal cross-check does not involve any geometry: the kernel\\nsum over character tuples equals (q^r−1)·(−1)ⁿ·Σ_j B_j^r·H(full params) exactly, by pure character algebra. [ zetafac::star_identity_check]\\nevaluates both sides at level r and returns the residual, which must stay\\nbelow 1e-30 (the STAR_TOL the CLI enforces in verify mode). Because it\\nuses the unreduced transforms, it validates the piece construction and the\\nmulti-variable identity independently of the weight bookkeeping. There is also a direct count prediction for the open torus stratum\\n([ zetafac::predicted_star_count]), compared against the brute-force star_part in the tests.","breadcrumbs":"Counting points: three oracles » The star identity","id":"21","title":"The star identity"},"22":{"body":"","breadcrumbs":"Assembling the zeta factor » Assembling the zeta factor","id":"22","title":"Assembling the zeta factor"},"23":{"body":"For a smooth hypersurface X_λ ⊂ Pⁿ, all cohomology outside the middle\\ndegree is forced: the zeta function is Z(X_λ, T) = P(T)^{(−1)ⁿ} / ( (1−T)(1−qT)⋯(1−q^{n−1}T) ), so the only unknown is the middle factor P(T), a polynomial with integer\\ncoefficients, constant term 1, whose reciprocal roots have absolute value q^{(n−1)/2} — possibly with some trivial roots of adjacent even weight\\ncontributed by special strata (the D · q^{r(n−1)/2} term that the ledger u_r tracks). [ zetafac::assemble_p] computes P as P(T) = exp( (−1)ⁿ Σ_r w_r · T^r / r ),\\nw_r = u_r^{mid} + (−1)ⁿ Σ_j B_j^r · F(j)_r, where the ledger part is exact and each piece’s B^r·F(j)_r is obtained by exponential fitting: evaluate at levels 1..horizon, find the minimal\\nlinear recurrence ([ zetafac::fit_exponentials]), extract its characteristic\\nroots (Durand–Kerner), and solve for the coefficients. Fitting artifacts at\\ntoo-small horizons surface as DegreeUndetermined, or as RoundingGap / Integrality when a spurious fit produces non-integer exponents; the CLI\\nretries with a deeper horizon until the fit stabilizes or the field-size cap\\nis reached. Every coefficient of the resulting polynomial must round to an integer within 1e-10, and the exponents of the fitted factors must round within 1e-6 —\\nthese are correctness gates, not tunables.","breadcrumbs":"Assembling the zeta factor » From counts to P(T)","id":"23","title":"From counts to P(T)"},"24":{"body":"[ zetafac::classify_weights] takes the factored P and buckets each\\nreciprocal root by the half-integer w with |β| = q^{w/2} (relative\\ntolerance 1e-6), returning (weight, multiplicity) pairs. For the deformed\\ncubic at q = 7 the answer is [(1, 2)]: a genus-1 middle factor 1 + T + 7T² for every ordinary fiber.","breadcrumbs":"Assembling the zeta factor » Weight classification","id":"24","title":"Weight classification"},"25":{"body":"The hypergeometric prediction splits the torus count into a lattice term (q^r−1)ⁿ/q^r, the middle-weight part, and a remainder. The weight filter\\nclaim is that the remainder is a sum of exponentials with bases of magnitude\\nat most q^{(n−2)/2} — strictly smaller than the middle weight, so it cannot\\ncontaminate P. The acceptance suite checks this directly: it computes\\nbrute-force star counts at levels 1–4, subtracts the lattice and middle\\nterms, fits exponentials to the residual sequence, and verifies every base\\nmagnitude is ≤ q^{(n−2)/2}·(1 + 1e-6).","breadcrumbs":"Assembling the zeta factor » What gets discarded, and why that is safe","id":"25","title":"What gets discarded, and why that is safe"},"26":{"body":"Independently of the spectral route, P(T) is pinned by counts alone: Σ_k a_k T^k = exp( (−1)ⁿ Σ_r (N_r − Σ_{i<n} q^{ri}) T^r / r ) ([ zetafac::p_series_from_counts]). In verify mode the CLI compares the\\nassembled coefficients with this series through T^{r_max}; the tests push\\nthe comparison through T^6 using the character-sum oracle for the levels\\nwhere enumeration is too expensive. Taylor coefficients beyond deg P must\\nvanish — a stringent consistency test, since they are alternating sums of\\nlarge integers.","breadcrumbs":"Assembling the zeta factor » Cross-checking against raw counts","id":"26","title":"Cross-checking against raw counts"},"27":{"body":"The reciprocal roots of P(T) are algebraic integers; viewed p-adically,\\ntheir valuations are the slopes of the Newton polygon of P. A fiber is ordinary when the polygon has a slope-zero edge — equivalently, when some\\ncoefficient a_k ( k ≥ 1) of P is a p-adic unit\\n([ report::has_unit_reciprocal_root]). The corresponding reciprocal root γ\\nwith |γ|_p = 1 is the unit root, and it can be computed without\\nknowing P from a deformation series — which gives the pipeline yet another\\nindependent cross-check.","breadcrumbs":"Unit roots and ordinarity » Unit roots and ordinarity","id":"27","title":"Unit roots and ordinarity"},"28":{"body":"The series attached to the family is 𝓕(x) = Σ_k (kα)! / ∏_i (kα_i)! · ∏_i c̃_i^{kα_i} · x^k, with integer multinomial coefficients and Teichmüller-lifted coefficients c̃_i ([ padic::f_series]). Truncations 𝓕_s keep degrees < p^s\\n([ padic::eval_f_trunc]). Working in the ring W(F_q)/p^m ([ padic::PadicCtx]: an unramified\\nextension of Z/p^m with Frobenius σ and Teichmüller lifts), the criterion\\nand value are: Ordinarity test: reduce 𝓕_1 mod p and evaluate at λ^{−α} in F_q\\n([ padic::f11_residue]); the fiber is ordinary iff the value is nonzero. Unit root: with λ̃ the Teichmüller lift of an ordinary λ, the ratio f = 𝓕_{m}(λ̃^{−α}) / σ(𝓕_{m−1})(λ̃^{−α}) (mod p^m) stabilizes (the implementation evaluates one extra truncation level and\\ninsists the two candidate ratios agree — Error::Stabilization otherwise),\\nand the unit root is the norm-like product γ = ∏_{i<f} σ^i(f). The cost is O(p^{m+1}) coefficient steps, so precision is cheap for small p. The series coefficients are produced by a streaming multinomial\\nrecurrence that strips p-powers as it goes, so no factorial overflows p-adic precision.","breadcrumbs":"Unit roots and ordinarity » The deformation series","id":"28","title":"The deformation series"},"29":{"body":"As an internal consistency check on the series algebra, the logarithmic\\ncoefficients of the deformation equation have two independent closed forms: an exact integer-factorial form, Σ_{kα ≤ m} m! / ( (kα₁)!⋯(kα_{n+1})!·(m−kα)! ) · ∏ c̃_i^{kα_i} · (−Λ)^{m−kα}, a Pochhammer-ratio form: (−Λ)^m Σ_k R_k (C̃Λ^{−α})^k with R_k an exact\\nrational whose denominator is provably prime to p. [ padic::fgl_log_coefficient] computes both and the tests require equality\\nmod p^6 for m = 0..20 on two different families. Since the two forms\\nexercise disjoint code paths (integer multinomials vs. rational Pochhammer\\nproducts reduced mod p^m), agreement pins down the constant C̃ and the α-folding conventions.","breadcrumbs":"Unit roots and ordinarity » Log-coefficient closed forms","id":"29","title":"Log-coefficient closed forms"},"3":{"body":"Everything starts from the exponent matrix A, whose columns are the\\nmonomials of the undeformed hypersurface. FamilySpec::new validates the raw\\ndata and computes the derived invariants the rest of the pipeline consumes.","breadcrumbs":"The family model » The family model","id":"3","title":"The family model"},"30":{"body":"In verify mode (and in the acceptance suite) the unit root is confronted\\nwith the zeta factor: unit_root returns Some γ iff P has a unit reciprocal root by the\\nNewton-polygon test — on a full λ sweep this checks the ordinarity\\ncriterion against an object computed by entirely different means; the value satisfies Σ_k a_k γ^{deg−k} ≡ 0 (mod p^m), i.e. 1/γ is a\\nroot of P to the working precision. Both ordinary and supersingular fibers occur: the deformed cubic over F_11\\nhas supersingular fibers exactly at λ ∈ {5, 7, 10}. (At q = 11 the\\nspectral assembly itself is unavailable — 3 ∤ q−1 violates the structural\\nassumptions — so P is rebuilt from raw counts there, and the p-adic\\nmachinery, which never needed those assumptions, is checked against it.)","breadcrumbs":"Unit roots and ordinarity » Cross-checks against P(T)","id":"30","title":"Cross-checks against P(T)"},"31":{"body":"hgzeta <analyze|count|zeta|unitroot|verify> --config <file> [--r <int>] [--threads <int>] [--out <dir>] [--format json|text] Subcommand What it does analyze Structural report only: α data, C, elementary divisors, kernel representatives, assumption verdicts. Errors with exit 3 if either structural assumption fails. count Point counts for r = 1..r_max from every enabled oracle, with star-identity residuals. zeta Assembles P(T) and classifies its weights. unitroot Ordinarity and the p-adic unit root at the configured precision. verify All of the above, with every cross-check enforced: oracle counts must be equal, star residuals < 1e-30, P(T) must match the count series, and the unit-root criterion must agree with the Newton polygon of P. Flags: --r overrides r_max from the config; --threads sizes the worker\\npool for λ sweeps (each λ is independent); --out chooses where report.json and report.txt are written (both are always written, with\\nidentical data); --format picks which rendering goes to stdout.","breadcrumbs":"The command-line interface » The command-line interface","id":"31","title":"The command-line interface"},"32":{"body":"The config file is JSON (this example is doc-tested in the config module): { \\"p\\": 7, \\"q\\": 7, \\"n\\": 2, \\"A\\": [3,0,0, 0,3,0, 0,0,3], \\"c\\": [1,1,1], \\"lambda\\": \\"all\\", \\"r_max\\": 3\\n} Field Meaning Default p, q, n characteristic, field size ( q = p^f), projective dimension required A exponent matrix, row-major, (n+1)² entries required c coefficients c_1..c_{n+1} as prime-field representatives, nonzero mod p required lambda an integer representative, or \\"all\\" for the full F_q^× sweep required r_max highest extension level for counting required precision_bits float precision of the character layer 256 padic_precision m in W(F_q)/p^m for the unit root 6 oracles subset of [\\"brute\\", \\"delsarte\\", \\"hgf\\"] all three budget enumeration cap for the brute oracle 10⁹ Unknown fields are rejected (typos should fail loudly).","breadcrumbs":"The command-line interface » Configuration","id":"32","title":"Configuration"},"33":{"body":"Code Meaning 0 success 2 config error (bad JSON, invalid field values, unknown subcommand) 3 structural assumption violated (kernel divisibility, stratum divisors, `p 4 verification mismatch (oracles disagree, residual too large, unit root inconsistent with P) 5 budget or table cap exceeded","breadcrumbs":"The command-line interface » Exit codes","id":"33","title":"Exit codes"},"34":{"body":"$ hgzeta verify --config dwork7.json --threads 3\\nfamily: n=2, q=7, α=(1,1,1), α=3, C=6\\nassumptions: kernel divisibility PASS, stratum divisors PASS\\nλ=1: counts agree (r≤3), P = 1 + T + 7T², weights [(1,2)], ordinary\\nλ=2: counts agree (r≤3), P = 1 + T + 7T², weights [(1,2)], ordinary\\nλ=3: skipped (λ³ = C)\\n...\\n$ echo $?\\n0 A structurally inadmissible family fails fast: $ hgzeta analyze --config mixed_quartic_q13.json\\nerror: divisibility assumption fails: α_1 = 2 does not divide s_12 = 1\\n$ echo $?\\n3","breadcrumbs":"The command-line interface » Example session","id":"34","title":"Example session"},"4":{"body":"Smoothness of the anchor hypersurface X_0 forces each variable to appear\\nwith a dominant exponent in some monomial: after permuting columns, every\\ndiagonal entry of A is n+1 or n. [ family::normalize] finds such a\\npermutation (via bipartite matching) or rejects the matrix with Error::NotNormalizable; coefficients are permuted along with their columns,\\nso the two presentations of a family in different column orders produce\\nidentical FamilySpec values.","breadcrumbs":"The family model » Normalization","id":"4","title":"Normalization"},"5":{"body":"Let A′ = A − (all-ones matrix). For a valid family, ker A′ has rank one\\nand is generated by a primitive positive vector (α₁, …, α_{n+1}); its sum\\nis α = α₁ + … + α_{n+1}. These integers control everything: the hypergeometric parameter lists are built from the orbits of the\\ncharacters of order α_i and α, the deformation enters only through the combination λ^{−α}, the constant C = α^α · ∏ c_i^{α_i} · ∏ α_i^{−α_i} (in F_q) marks the singular fibers: the factorization hypotheses need λ ≠ 0 and λ^α ≠ C ( FamilySpec::lambda_admissible). The constructor also insists p ∤ α_i and p ∤ α: the deformation direction\\nmust be tame.","breadcrumbs":"The family model » The α-vector","id":"5","title":"The α-vector"},"6":{"body":"The spectral decomposition over F_q exists only when two divisibility\\nconditions hold. Both are checked up front; the CLI maps violations to exit\\ncode 3. Kernel coordinate divisibility ( intlin::kernel_reps). The character\\ntuples contributing to the point count form cosets of a one-dimensional\\nlattice inside (Z/(q−1))^{n+1}. Each coset representative s_j must\\nhave α_i | s_{ij}, otherwise the piece cannot be folded into the orbit\\nstructure of the hypergeometric parameters. Stratum divisors ( intlin::check_asm2). For every subset J of\\ncoordinates, the elementary divisors of the submatrix of A supported on J must divide q − 1, so that the character sums over each torus\\nstratum close up at level 1. Neither condition implies the other. For the mixed quartic family x₁⁴ + x₁x₂³ + x₃⁴ + x₄⁴ − λ·x₁x₂x₃x₄ (with α = (2,4,3,3)), the second\\ncondition already holds at q = 13, but the kernel representative ((q−1)/4, 0, 3(q−1)/4, 0) needs 8 | q−1; the combined verdict is q ≡ 1 (mod 24). For the Fermat quartic threefold deformation the verdict\\nis q ≡ 1 (mod 4). The acceptance suite pins both tables.","breadcrumbs":"The family model » Two structural assumptions","id":"6","title":"Two structural assumptions"},"7":{"body":"[ family::smoothness_scan] brute-forces projective representatives over F_{q^s} for s ≤ bound, looking for a common zero of F_λ and all its\\npartial derivatives. For diagonal families, singular fibers coincide with\\nthe inadmissible locus λ^α = C; the test suite checks this equivalence at q = 7. A degenerate corner worth knowing: for the Fermat quartic threefold\\nat q = 5 every unit satisfies λ⁴ = 1 = C, so no fiber in the torus is\\nboth smooth and admissible — statements quantified over smooth admissible\\nfibers are vacuous there, and the suite uses q = 13 as the non-vacuous\\ncompanion.","breadcrumbs":"The family model » Smoothness scanning","id":"7","title":"Smoothness scanning"},"8":{"body":"","breadcrumbs":"Fields, characters, and Gauss sums » Fields, characters, and Gauss sums","id":"8","title":"Fields, characters, and Gauss sums"},"9":{"body":"[ ffield::FieldCtx] models F_{q^r} with q = p^f using exp/dlog tables:\\nevery nonzero element is a power of a fixed generator, so multiplication,\\ninversion, and powering are index arithmetic modulo m = q^r − 1. Field\\nsizes are capped (default 2²⁴) because the tables — and the root-of-unity\\ntables of the character layer — are dense. Two properties matter for the pipeline and are enforced by construction: Norm-compatible embeddings. ext.embed(&base, a) maps F_q into F_{q^r} so that discrete logs scale by (q^r−1)/(q−1). Consequently a\\ncharacter of level 1 lifts to level r by multiplying its index by the\\nsame factor — the tower of character groups is aligned with the tower of\\nfields. Trace compatibility. The additive character at level r is θ_r = θ ∘ Tr, with Tr the absolute trace to F_p.","breadcrumbs":"Fields, characters, and Gauss sums » Finite field towers","id":"9","title":"Finite field towers"}},"length":35,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{",":{"0":{",":{"3":{"df":1,"docs":{"32":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{",":{"0":{"df":1,"docs":{"32":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},".":{".":{"2":{"0":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"3":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":1.7320508075688772},"13":{"tf":2.0},"16":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}}},"1":{")":{"^":{"df":0,"docs":{},"m":{"df":1,"docs":{"13":{"tf":1.0}}},"{":{"df":0,"docs":{},"β":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"·":{"df":0,"docs":{},"q":{"^":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},",":{"1":{",":{"1":{"df":2,"docs":{"32":{"tf":1.0},"34":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"df":1,"docs":{"34":{"tf":1.4142135623730951}}},"df":0,"docs":{}},".":{".":{"=":{"2":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}},"r":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"/":{"(":{"df":0,"docs":{},"q":{"^":{"df":0,"docs":{},"r":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"0":{"df":4,"docs":{"20":{"tf":1.0},"23":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0}}},"1":{"df":1,"docs":{"30":{"tf":1.0}}},"3":{"df":3,"docs":{"15":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}},"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{")":{"?":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":19,"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":3.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"24":{"tf":1.7320508075688772},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"30":{"tf":1.0},"34":{"tf":2.0},"6":{"tf":2.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"e":{"df":9,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0},"31":{"tf":1.0}}},"–":{"4":{"df":2,"docs":{"16":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}},"−":{"df":0,"docs":{},"t":{")":{"(":{"1":{"df":0,"docs":{},"−":{"df":0,"docs":{},"q":{"df":0,"docs":{},"t":{")":{"df":0,"docs":{},"⋯":{"(":{"1":{"df":0,"docs":{},"−":{"df":0,"docs":{},"q":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"n":{"df":0,"docs":{},"−":{"1":{"df":0,"docs":{},"}":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"2":{",":{"4":{",":{"3":{",":{"3":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"df":1,"docs":{"6":{"tf":1.0}}},"5":{"6":{"df":4,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"32":{"tf":1.0}}},"df":0,"docs":{}},"8":{"df":1,"docs":{"19":{"tf":1.0}}},"df":6,"docs":{"19":{"tf":1.0},"24":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"3":{"(":{"df":0,"docs":{},"q":{"df":0,"docs":{},"−":{"1":{")":{"/":{"4":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},",":{"0":{",":{"0":{"df":1,"docs":{"32":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"df":5,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"31":{"tf":1.0}}},"df":7,"docs":{"2":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":2.0},"6":{"tf":1.0}}},"4":{"df":4,"docs":{"14":{"tf":1.7320508075688772},"2":{"tf":1.0},"33":{"tf":1.0},"6":{"tf":1.0}}},"5":{"0":{"df":1,"docs":{"15":{"tf":1.0}}},"3":{"2":{"9":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":5,"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0},"7":{"tf":1.0}}},"6":{"df":6,"docs":{"10":{"tf":1.0},"2":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"32":{"tf":1.0}}},"7":{"3":{"df":1,"docs":{"19":{"tf":1.0}}},"df":6,"docs":{"15":{"tf":1.0},"2":{"tf":1.4142135623730951},"24":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.4142135623730951},"7":{"tf":1.0}},"t":{"df":3,"docs":{"2":{"tf":1.0},"24":{"tf":1.0},"34":{"tf":1.4142135623730951}}}},"8":{"df":1,"docs":{"6":{"tf":1.0}}},"_":{"1":{"df":2,"docs":{"28":{"tf":1.0},"34":{"tf":1.0}}},"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}},"i":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"i":{"df":2,"docs":{"15":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":6,"docs":{"13":{"tf":1.4142135623730951},"15":{"tf":2.23606797749979},"16":{"tf":1.0},"28":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}}},"j":{"df":2,"docs":{"20":{"tf":1.0},"23":{"tf":1.0}}},"k":{"df":4,"docs":{"26":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}}},"p":{"df":1,"docs":{"27":{"tf":1.0}}},"r":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"9":{"tf":1.0}}},"s":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"28":{"tf":1.0}}},"{":{"df":0,"docs":{},"i":{"<":{"df":0,"docs":{},"f":{"df":1,"docs":{"28":{"tf":1.0}}},"n":{"df":2,"docs":{"20":{"tf":1.0},"26":{"tf":1.0}}}},"df":0,"docs":{}},"k":{"df":1,"docs":{"29":{"tf":1.0}}},"m":{"df":1,"docs":{"28":{"tf":1.0}},"−":{"1":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}},"n":{"+":{"1":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"s":{"=":{"1":{"df":0,"docs":{},"}":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"β":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"x":{"df":1,"docs":{"10":{"tf":1.0}}}}},"a":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"(":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}},"_":{"df":0,"docs":{},"i":{"(":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"i":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.0}}},"k":{"df":3,"docs":{"26":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0}}},"m":{"df":1,"docs":{"13":{"tf":1.0}}},"{":{"df":0,"docs":{},"n":{"+":{"1":{"df":0,"docs":{},"}":{"[":{"df":0,"docs":{},"φ":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"n":{"+":{"1":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"v":{"df":1,"docs":{"31":{"tf":1.0}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":4,"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"9":{"tf":1.0}}}}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":4,"docs":{"15":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"df":0,"docs":{}},"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"c":{"df":6,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}}},"df":0,"docs":{}},"j":{"a":{"c":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0},"34":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}}}}}},"l":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"b":{"df":0,"docs":{},"r":{"a":{"df":5,"docs":{"16":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"v":{"a":{"df":0,"docs":{},"l":{":":{":":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"g":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}},"g":{"df":1,"docs":{"4":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"z":{"df":2,"docs":{"31":{"tf":1.0},"34":{"tf":1.0}},"e":{"df":0,"docs":{},"|":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"|":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"|":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"|":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"31":{"tf":1.0}}}}}}}}}}}}}}}}}}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}}}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"27":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"w":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}}},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}}},"r":{"c":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":7,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"p":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"!":{"(":{"df":0,"docs":{},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{".":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"(":{"&":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{")":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"f":{"6":{"4":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{".":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{"_":{"a":{"d":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"(":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{".":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"a":{".":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"a":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}},"p":{"df":0,"docs":{},"t":{"df":7,"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"33":{"tf":1.0},"34":{"tf":1.4142135623730951}}}}}}}},"t":{"df":0,"docs":{},"t":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"v":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}},"₁":{"[":{"df":0,"docs":{},"φ":{"_":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"b":{"[":{"df":0,"docs":{},"φ":{"_":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"^":{"df":0,"docs":{},"r":{"df":0,"docs":{},"·":{"df":0,"docs":{},"f":{"(":{"df":0,"docs":{},"j":{")":{"_":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"_":{"df":0,"docs":{},"j":{"^":{"df":0,"docs":{},"r":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"23":{"tf":1.0}},"·":{"df":0,"docs":{},"h":{"(":{"df":0,"docs":{},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},"df":2,"docs":{"11":{"tf":1.0},"20":{"tf":1.4142135623730951}}},"k":{"df":1,"docs":{"13":{"tf":1.0}}}},"a":{"d":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"16":{"tf":1.0},"25":{"tf":1.4142135623730951}}}}},"df":3,"docs":{"13":{"tf":2.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"21":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"df":0,"docs":{}},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"h":{"df":8,"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"g":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":6,"docs":{"1":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"25":{"tf":1.0},"32":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}}},"u":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":3,"docs":{"18":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":1,"docs":{"17":{"tf":1.0}}},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"2":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"c":{"=":{"6":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}},"_":{"1":{".":{".":{"c":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"n":{"+":{"1":{"df":1,"docs":{"32":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"{":{"df":0,"docs":{},"n":{"+":{"1":{"df":0,"docs":{},"}":{"df":0,"docs":{},"·":{"df":0,"docs":{},"t":{"^":{"df":0,"docs":{},"{":{"a":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"n":{"+":{"1":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"a":{"df":0,"docs":{},"l":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}},"n":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}}},"d":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":4,"docs":{"23":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"9":{"tf":1.0}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":1,"docs":{"2":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"20":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"1":{"tf":1.0},"10":{"tf":1.0}}}}},"df":8,"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"29":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.4142135623730951},"34":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}}},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.4142135623730951}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":15,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"26":{"tf":1.0},"32":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":2.0}},"e":{"df":0,"docs":{},"r":{"/":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"32":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{":":{":":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"7":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"28":{"tf":1.0}}}},"c":{"df":0,"docs":{},"k":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":12,"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"16":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":3,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"c":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}}},"df":0,"docs":{},"f":{"df":2,"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"i":{"df":2,"docs":{"1":{"tf":1.0},"31":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"df":6,"docs":{"18":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"29":{"tf":1.0},"6":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":4,"docs":{"18":{"tf":1.0},"29":{"tf":1.0},"33":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":9,"docs":{"1":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":2.0},"29":{"tf":1.0},"32":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":3,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.0}}}}}}}}},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772}}}}}},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":4,"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"14":{"tf":2.0},"7":{"tf":1.0}}}}},"p":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"r":{"df":3,"docs":{"18":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"t":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":1,"docs":{"10":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"t":{"df":12,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"u":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}},"s":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.7320508075688772}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":4,"docs":{"31":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"34":{"tf":1.4142135623730951}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"9":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"26":{"tf":1.0},"29":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"15":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"m":{"df":2,"docs":{"11":{"tf":1.0},"3":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.0},"6":{"tf":1.0}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"29":{"tf":1.0}}}},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.7320508075688772},"20":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":3,"docs":{"15":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.4142135623730951}}}},"t":{"df":2,"docs":{"18":{"tf":1.0},"28":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{":":{":":{"b":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":18,"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":2.0},"32":{"tf":1.0},"34":{"tf":1.4142135623730951},"6":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":4,"docs":{"1":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":3,"docs":{"21":{"tf":1.0},"27":{"tf":1.0},"31":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"x":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}}},"u":{"b":{"df":0,"docs":{},"i":{"c":{"df":3,"docs":{"2":{"tf":1.0},"24":{"tf":1.0},"30":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"̃":{"_":{"df":0,"docs":{},"i":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"k":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"i":{"df":2,"docs":{"28":{"tf":1.0},"29":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{},"λ":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"df":0,"docs":{},"α":{"df":0,"docs":{},"}":{")":{"^":{"df":0,"docs":{},"k":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"₁":{"df":0,"docs":{},"·":{"df":0,"docs":{},"t":{"^":{"df":0,"docs":{},"{":{"a":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":4,"docs":{"15":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"31":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":1,"docs":{"23":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"6":{"tf":1.0}}}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"32":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":9,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}}}}}},"g":{"df":1,"docs":{"26":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0}},"e":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}},"−":{"df":0,"docs":{},"k":{"df":1,"docs":{"30":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"32":{"tf":1.0}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"29":{"tf":1.0}}}}},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"s":{"df":1,"docs":{"9":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"h":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}},"i":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"11":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"32":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}},"r":{"df":1,"docs":{"31":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"19":{"tf":1.0},"25":{"tf":1.0}}}}}},"df":0,"docs":{}}},"s":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}},"e":{"df":1,"docs":{"33":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{},"j":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"29":{"tf":1.0}}}}}}},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"15":{"tf":1.0},"34":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{},"s":{"df":4,"docs":{"1":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"o":{"df":0,"docs":{},"r":{"df":4,"docs":{"31":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}}}}},"o":{"c":{"df":3,"docs":{"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"32":{"tf":1.0}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"29":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"–":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"7":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}},"^":{"df":0,"docs":{},"{":{"2":{"df":0,"docs":{},"π":{"df":0,"docs":{},"i":{"/":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"h":{"df":11,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":1,"docs":{"34":{"tf":1.4142135623730951}}}}},"d":{"df":0,"docs":{},"g":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"31":{"tf":1.0},"6":{"tf":1.0}}}}},"df":2,"docs":{"19":{"tf":1.0},"9":{"tf":1.0}}}}}}}},"m":{"b":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"n":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"c":{"df":3,"docs":{"21":{"tf":1.0},"31":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"5":{"tf":1.0}}}},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"30":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"32":{"tf":1.0},"4":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"26":{"tf":1.0},"32":{"tf":1.0}}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":4,"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.0}}},"t":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"27":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{":":{":":{"b":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}}},"s":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"28":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":3,"docs":{"31":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":8,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"10":{"tf":1.0},"23":{"tf":1.0}}},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"3":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":9,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.7320508075688772},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.4142135623730951}},"l":{"df":0,"docs":{},"i":{"df":4,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"32":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"29":{"tf":1.0}}}}},"df":0,"docs":{}}},"h":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"6":{"tf":1.0}}}},"t":{"df":3,"docs":{"18":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.0}}}},"p":{"/":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":3,"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"26":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":8,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"3":{"tf":1.0},"32":{"tf":1.0},"4":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":4,"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.4142135623730951}}}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"t":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"d":{"(":{"&":{"b":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"23":{"tf":1.0}}}},"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}}}},"f":{"(":{"df":0,"docs":{},"j":{")":{"_":{"df":0,"docs":{},"r":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"_":{"1":{"1":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"4":{"9":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"7":{"df":1,"docs":{"2":{"tf":1.7320508075688772}}},"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0}},"p":{"df":1,"docs":{"9":{"tf":1.0}}},"q":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}},"{":{"df":0,"docs":{},"q":{"^":{"df":1,"docs":{"7":{"tf":1.0}},"r":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"λ":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":10,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"30":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":2,"docs":{"28":{"tf":1.0},"29":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":3,"docs":{"31":{"tf":1.0},"32":{"tf":1.0},"34":{"tf":1.4142135623730951}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":11,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"34":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}},"y":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{"_":{"a":{"d":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"2":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}},"df":1,"docs":{"28":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"x":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"i":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":8,"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.7320508075688772}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":8,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"32":{"tf":2.0},"33":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"31":{"tf":1.0},"32":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"n":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}}},"d":{"df":2,"docs":{"23":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}},"t":{"df":5,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":2.23606797749979},"25":{"tf":1.0}}},"x":{"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"20":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}},"o":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"20":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"r":{"c":{"df":6,"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.4142135623730951}}}},"df":4,"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":2.0},"6":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"u":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":4,"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":4,"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"(":{"(":{"a":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"·":{"df":0,"docs":{},"χ":{")":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"b":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"·":{"df":0,"docs":{},"χ":{")":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"1":{"df":0,"docs":{},"}":{")":{"/":{"df":0,"docs":{},"g":{"(":{"b":{"_":{"df":0,"docs":{},"i":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"a":{"_":{"df":0,"docs":{},"i":{")":{"df":0,"docs":{},"·":{"df":0,"docs":{},"g":{"(":{"b":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"15":{"tf":1.0}},"}":{"df":0,"docs":{},"φ":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"}":{"^":{"df":0,"docs":{},"s":{")":{"/":{"df":0,"docs":{},"g":{"(":{"df":0,"docs":{},"φ":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"}":{"^":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"·":{"df":0,"docs":{},"χ":{")":{"/":{"df":0,"docs":{},"g":{"(":{"a":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"b":{"df":1,"docs":{"15":{"tf":1.0}},"·":{"df":0,"docs":{},"φ":{"_":{"df":0,"docs":{},"α":{"^":{"df":0,"docs":{},"s":{")":{"/":{"df":0,"docs":{},"g":{"(":{"df":0,"docs":{},"φ":{"_":{"df":0,"docs":{},"α":{"^":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"ρ":{"^":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"φ":{"^":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"χ":{")":{")":{"^":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"·":{"df":0,"docs":{},"g":{"df":1,"docs":{"10":{"tf":1.0}}}}},"_":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"φ":{"^":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}},"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"20":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"14":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}}}},"df":3,"docs":{"10":{"tf":2.0},"11":{"tf":1.7320508075688772},"20":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}},"u":{"df":1,"docs":{"24":{"tf":1.0}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"27":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"e":{"df":2,"docs":{"28":{"tf":1.0},"31":{"tf":1.0}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"u":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"h":{"(":{"a":{"df":2,"docs":{"13":{"tf":1.4142135623730951},"16":{"tf":1.0}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"e":{"d":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":1,"docs":{"15":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"2":{"tf":1.0}}}}},"g":{"df":0,"docs":{},"f":{"df":1,"docs":{"32":{"tf":1.0}},"f":{":":{":":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"f":{"df":1,"docs":{"13":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"g":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"a":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":1,"docs":{"13":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{":":{":":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{":":{":":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{":":{":":{"b":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}}}}}},"f":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{":":{":":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"h":{"df":0,"docs":{},"g":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"t":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"f":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"p":{"a":{"d":{"df":0,"docs":{},"i":{"c":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"f":{"a":{"c":{":":{":":{"df":0,"docs":{},"{":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"31":{"tf":1.0},"34":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"32":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"6":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.4142135623730951}}}}}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":10,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"25":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}}}}}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":4,"docs":{"0":{"tf":1.7320508075688772},"23":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}}},"i":{"(":{"df":0,"docs":{},"f":{"df":1,"docs":{"28":{"tf":1.0}}}},".":{"df":1,"docs":{"30":{"tf":1.0}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":8,"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"31":{"tf":1.4142135623730951},"4":{"tf":1.0}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":2,"docs":{"28":{"tf":1.0},"30":{"tf":1.0}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"28":{"tf":1.0}}}}}}},"i":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"n":{"a":{"d":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"34":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":7,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":3,"docs":{"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"28":{"tf":1.0},"5":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":1,"docs":{"31":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"g":{"df":15,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.4142135623730951},"32":{"tf":1.0},"5":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"(":{"3":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"n":{"df":2,"docs":{"21":{"tf":1.0},"29":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{":":{":":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"m":{"2":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{":":{":":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"(":{"3":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"9":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":1,"docs":{"17":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":2,"docs":{"1":{"tf":1.0},"30":{"tf":1.0}}}}}}}},"j":{"df":4,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"32":{"tf":1.0},"33":{"tf":1.0}},"|":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}}}}}}},"k":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":4,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":3,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"28":{"tf":1.0}}}},"r":{"df":1,"docs":{"5":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":10,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"27":{"tf":1.0},"7":{"tf":1.0}}}}},"·":{"(":{"df":0,"docs":{},"q":{"^":{"df":0,"docs":{},"r":{"df":0,"docs":{},"−":{"1":{")":{"/":{"(":{"df":0,"docs":{},"q":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"α":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{},"₁":{")":{"!":{"df":0,"docs":{},"⋯":{"(":{"df":0,"docs":{},"k":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"n":{"+":{"1":{"df":0,"docs":{},"}":{")":{"!":{"df":0,"docs":{},"·":{"(":{"df":0,"docs":{},"m":{"df":0,"docs":{},"−":{"df":0,"docs":{},"k":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"l":{"a":{"df":0,"docs":{},"m":{")":{"?":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"b":{"d":{"a":{"df":1,"docs":{"32":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"2":{"tf":2.449489742783178}}},"r":{"df":0,"docs":{},"g":{"df":2,"docs":{"26":{"tf":1.0},"33":{"tf":1.0}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"25":{"tf":1.4142135623730951},"6":{"tf":1.0}}},"df":0,"docs":{}}}},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"2":{"tf":1.0},"32":{"tf":1.0},"9":{"tf":1.0}}}}},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{},"v":{"df":1,"docs":{"14":{"tf":1.0}}}},"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"1":{"tf":1.0},"14":{"tf":2.0},"20":{"tf":1.7320508075688772},"23":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":15,"docs":{"10":{"tf":1.0},"11":{"tf":2.23606797749979},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.7320508075688772}}}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"13":{"tf":1.0},"17":{"tf":1.0}}},"y":{"df":0,"docs":{},"’":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":5,"docs":{"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"20":{"tf":1.4142135623730951},"28":{"tf":1.7320508075688772},"9":{"tf":1.0}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"19":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}}},"o":{"c":{"df":0,"docs":{},"u":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":1,"docs":{"29":{"tf":1.0}}}}}}}},"df":1,"docs":{"9":{"tf":1.0}}},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}}},"u":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"32":{"tf":1.0}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"20":{"tf":1.0}}}}}}},"m":{"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"2":{"tf":1.0},"30":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"d":{"df":2,"docs":{"16":{"tf":1.0},"25":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}}},"j":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"32":{"tf":1.0}}}}},"k":{"df":0,"docs":{},"e":{"df":4,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}},"p":{"df":2,"docs":{"6":{"tf":1.0},"9":{"tf":1.0}}},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"5":{"tf":1.0}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"31":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":6,"docs":{"1":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"df":4,"docs":{"11":{"tf":1.0},"29":{"tf":2.0},"32":{"tf":1.0},"9":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"n":{"df":3,"docs":{"30":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"i":{"d":{"d":{"df":0,"docs":{},"l":{"df":5,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.7320508075688772}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"10":{"tf":1.0},"19":{"tf":1.0}}}}}}},"n":{"d":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"23":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"x":{"df":1,"docs":{"6":{"tf":1.0}},"e":{"d":{"_":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"_":{"df":0,"docs":{},"q":{"1":{"3":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"o":{"d":{"df":6,"docs":{"20":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"30":{"tf":1.0},"32":{"tf":1.0},"6":{"tf":1.4142135623730951}},"e":{"df":3,"docs":{"21":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.0}},"l":{"df":2,"docs":{"2":{"tf":1.0},"9":{"tf":1.0}}}},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"32":{"tf":1.0}},"o":{"df":2,"docs":{"19":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":2,"docs":{"28":{"tf":1.4142135623730951},"29":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"l":{"df":4,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":2,"docs":{"11":{"tf":1.0},"9":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"−":{"df":0,"docs":{},"k":{"df":1,"docs":{"29":{"tf":1.0}}}}},"n":{"+":{"1":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"32":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}},"=":{"2":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":2,"docs":{"32":{"tf":1.4142135623730951},"4":{"tf":1.0}},"e":{"df":0,"docs":{},"e":{"d":{"df":4,"docs":{"19":{"tf":1.0},"30":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.0},"30":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"27":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}}}}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"23":{"tf":1.0},"7":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"0":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":5,"docs":{"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0},"9":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":5,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0}}}},"df":2,"docs":{"28":{"tf":1.0},"9":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"o":{"(":{"df":0,"docs":{},"p":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"m":{"+":{"1":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}}},"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"k":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}},"n":{"df":7,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"28":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}},"r":{"df":2,"docs":{"10":{"tf":1.0},"18":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":8,"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951},"33":{"tf":1.0}}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":5,"docs":{"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"11":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}}}},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":4,"docs":{"1":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}},"i":{"df":7,"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"30":{"tf":1.0},"34":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":2,"docs":{"28":{"tf":1.0},"6":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"31":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":13,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.7320508075688772},"20":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"31":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"p":{"(":{"df":0,"docs":{},"t":{")":{"^":{"df":0,"docs":{},"{":{"(":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":8,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"31":{"tf":1.4142135623730951}}}},"^":{"6":{"df":1,"docs":{"29":{"tf":1.0}}},"df":1,"docs":{"28":{"tf":1.0}},"f":{"df":2,"docs":{"32":{"tf":1.0},"9":{"tf":1.0}}},"m":{"df":3,"docs":{"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}}}},"_":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"a":{"d":{"df":0,"docs":{},"i":{"c":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"f":{"1":{"1":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"p":{"a":{"d":{"df":0,"docs":{},"i":{"c":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"x":{"df":1,"docs":{"28":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"32":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"x":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":3,"docs":{"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"24":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"14":{"tf":1.7320508075688772},"21":{"tf":1.0}},"e":{"df":0,"docs":{},"t":{"df":9,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"!":{"[":{"1":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":2,"docs":{"13":{"tf":1.0},"14":{"tf":1.0}}}}}}}},"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"34":{"tf":1.4142135623730951}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"29":{"tf":1.0}}}}},"df":17,"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"14":{"tf":1.7320508075688772},"2":{"tf":2.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":2.23606797749979},"28":{"tf":2.0},"29":{"tf":1.0},"30":{"tf":2.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.7320508075688772},"33":{"tf":1.4142135623730951},"34":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.7320508075688772}}}}}}},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{},"e":{"c":{"df":7,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"6":{"tf":1.0}},"e":{"df":0,"docs":{},"’":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}},"n":{"df":4,"docs":{"10":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"27":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}}}}}}}},"l":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"u":{"df":2,"docs":{"1":{"tf":1.0},"20":{"tf":1.0}}}},"o":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":1,"docs":{"29":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"27":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"23":{"tf":1.4142135623730951}}}}}}}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"31":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"15":{"tf":1.0},"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"16":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"28":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":6,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"28":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"32":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":6,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"25":{"tf":1.0}},"e":{"d":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"20":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"29":{"tf":1.0},"32":{"tf":1.0}}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":5,"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0}},"t":{"df":5,"docs":{"11":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":5,"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"32":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"v":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":3,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.0}}}}},"ⁿ":{"(":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"q":{"^":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"q":{"=":{"7":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}},"^":{"df":0,"docs":{},"r":{"df":5,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}},"−":{"1":{")":{"/":{"(":{"df":0,"docs":{},"q":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"·":{"(":{"df":0,"docs":{},"−":{"1":{")":{"df":0,"docs":{},"ⁿ":{"df":0,"docs":{},"·":{"df":0,"docs":{},"σ":{"_":{"df":0,"docs":{},"j":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"ⁿ":{"/":{"df":0,"docs":{},"q":{"^":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"{":{"(":{"2":{"df":0,"docs":{},"·":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"df":0,"docs":{},"−":{"1":{")":{"/":{"2":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"−":{"1":{")":{"/":{"2":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{")":{"/":{"2":{"df":1,"docs":{"25":{"tf":1.0}},"}":{"df":0,"docs":{},"·":{"(":{"1":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"n":{"df":0,"docs":{},"−":{"1":{")":{"/":{"2":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":1,"docs":{"14":{"tf":1.0}},"i":{"df":2,"docs":{"20":{"tf":1.0},"26":{"tf":1.0}}},"n":{"df":1,"docs":{"18":{"tf":1.0}}}},"w":{"/":{"2":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":8,"docs":{"15":{"tf":1.4142135623730951},"19":{"tf":1.0},"24":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.7320508075688772},"6":{"tf":2.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"u":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"−":{"1":{")":{"/":{"4":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":4,"docs":{"15":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"29":{"tf":1.4142135623730951}}},"m":{"a":{"df":0,"docs":{},"x":{"df":2,"docs":{"31":{"tf":1.0},"32":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"11":{"tf":1.0}}}},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{},"k":{"df":1,"docs":{"5":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":2,"docs":{"28":{"tf":1.4142135623730951},"29":{"tf":1.0}},"n":{"df":2,"docs":{"0":{"tf":1.0},"29":{"tf":1.4142135623730951}}}}}},"w":{"df":2,"docs":{"3":{"tf":1.0},"30":{"tf":1.0}}}},"df":12,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"31":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"e":{"a":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"19":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"c":{"df":6,"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.4142135623730951},"30":{"tf":1.0}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"r":{"d":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":2,"docs":{"23":{"tf":1.0},"28":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":4,"docs":{"14":{"tf":1.0},"20":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0}},"t":{"df":2,"docs":{"2":{"tf":1.0},"20":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"32":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.0}}}},"df":1,"docs":{"24":{"tf":1.0}}},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"25":{"tf":1.4142135623730951}}},"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}},":":{":":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"c":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":3,"docs":{"18":{"tf":1.0},"20":{"tf":1.0},"31":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":7,"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"29":{"tf":1.0},"32":{"tf":2.23606797749979}}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":6,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"31":{"tf":1.4142135623730951},"33":{"tf":1.0}}}},"df":0,"docs":{}},"t":{"df":2,"docs":{"11":{"tf":1.0},"3":{"tf":1.0}},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"20":{"tf":1.0},"23":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":4,"docs":{"15":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"30":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"28":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":11,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"27":{"tf":1.7320508075688772},"28":{"tf":1.4142135623730951},"30":{"tf":1.7320508075688772},"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"9":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"20":{"tf":1.0},"23":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"t":{"df":2,"docs":{"0":{"tf":1.0},"26":{"tf":1.0}}}},"w":{"df":1,"docs":{"32":{"tf":1.0}}}},"u":{"df":0,"docs":{},"g":{":":{":":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"n":{"df":1,"docs":{"2":{"tf":1.0}}}},"≤":{"3":{"df":1,"docs":{"34":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"s":{"_":{"1":{"2":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"j":{"df":2,"docs":{"20":{"tf":1.7320508075688772},"6":{"tf":1.0}}},"{":{"df":0,"docs":{},"i":{"df":0,"docs":{},"j":{"df":2,"docs":{"20":{"tf":1.0},"6":{"tf":1.0}},"}":{"/":{"df":0,"docs":{},"α":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":3,"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"9":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":2,"docs":{"30":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{}},"df":1,"docs":{"7":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"6":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"i":{"df":7,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.0},"31":{"tf":1.0}}}},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.4142135623730951}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}},"z":{"df":0,"docs":{},"e":{"df":4,"docs":{"23":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"9":{"tf":1.0}}}}},"k":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"34":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"27":{"tf":1.4142135623730951}}}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":3,"docs":{"19":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"23":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}}},"v":{"df":1,"docs":{"23":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"e":{"c":{".":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"(":{"2":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":1,"docs":{"2":{"tf":1.0}},"i":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"l":{"df":8,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"23":{"tf":1.0},"28":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":2,"docs":{"25":{"tf":1.0},"31":{"tf":1.4142135623730951}},"t":{"df":1,"docs":{"3":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"y":{"df":1,"docs":{"21":{"tf":1.0}}}},"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"28":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"t":{"a":{"df":2,"docs":{"20":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":2,"docs":{"10":{"tf":1.0},"18":{"tf":1.0}},"i":{"df":2,"docs":{"1":{"tf":1.0},"18":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":6,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"21":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"p":{"df":1,"docs":{"28":{"tf":1.0}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":7,"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"33":{"tf":1.0},"34":{"tf":1.0},"6":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"31":{"tf":1.0},"33":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"32":{"tf":1.0},"6":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"33":{"tf":1.0}}}}}},"df":0,"docs":{},"h":{"df":2,"docs":{"11":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}}}},"m":{"df":17,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":2.23606797749979},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":3,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":4,"docs":{"11":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"t":{"^":{"6":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{},"k":{"df":1,"docs":{"26":{"tf":1.0}}},"r":{"df":3,"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0}}},"{":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"j":{"df":1,"docs":{"15":{"tf":1.0}}}},"j":{"df":3,"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951}}},"{":{"df":0,"docs":{},"i":{"df":0,"docs":{},"j":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}}}},"a":{"b":{"df":0,"docs":{},"l":{"df":5,"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"33":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.7320508075688772}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}}},"y":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"b":{"df":0,"docs":{},"l":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"1":{"df":1,"docs":{"2":{"tf":1.7320508075688772}}},"_":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}}},"df":1,"docs":{"14":{"tf":1.0}}}},"df":5,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"34":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":0,"docs":{},"ü":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.7320508075688772}}}}}}}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"m":{"df":4,"docs":{"14":{"tf":1.7320508075688772},"20":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951}}}},"s":{"df":0,"docs":{},"t":{"df":12,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"26":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0},"7":{"tf":1.0}}}}},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"f":{"(":{"&":{"df":0,"docs":{},"t":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"a":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"&":{"df":0,"docs":{},"t":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"h":{"df":1,"docs":{"11":{"tf":1.0}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"30":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":3,"docs":{"11":{"tf":1.0},"31":{"tf":1.4142135623730951},"34":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":5,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"32":{"tf":1.0}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"6":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"26":{"tf":1.4142135623730951},"5":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"24":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"u":{"df":6,"docs":{"10":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"(":{"1":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":6,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}},"k":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":5,"docs":{"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}}}}}}},"df":1,"docs":{"9":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":4,"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"c":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"28":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"l":{"df":3,"docs":{"15":{"tf":1.4142135623730951},"21":{"tf":1.0},"6":{"tf":1.0}}}},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"o":{"df":11,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.7320508075688772},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}},"o":{"df":1,"docs":{"32":{"tf":1.0}}}}},"₁":{"df":0,"docs":{},"⋯":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"n":{"+":{"1":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"u":{"_":{"df":0,"docs":{},"r":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":2,"docs":{"20":{"tf":1.4142135623730951},"23":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"30":{"tf":1.0}}}}},"df":0,"docs":{}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}}}},"df":9,"docs":{"1":{"tf":1.0},"2":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"7":{"tf":1.0}},"i":{"df":1,"docs":{"9":{"tf":1.0}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}}}},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":3,"docs":{"23":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0}}}}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"14":{"tf":1.0},"21":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"p":{"df":1,"docs":{"6":{"tf":1.4142135623730951}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"/":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":2,"docs":{"13":{"tf":1.0},"14":{"tf":1.0}}}}}},"s":{"df":8,"docs":{"10":{"tf":1.0},"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":2.6457513110645907},"21":{"tf":1.0},"26":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}},"v":{"a":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":4,"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"u":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":13,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.4142135623730951},"30":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":2,"docs":{"13":{"tf":1.0},"26":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"15":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"1":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0}}}}}},"df":0,"docs":{},"r":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"31":{"tf":1.0},"6":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"33":{"tf":1.0}},"i":{"df":8,"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"34":{"tf":1.0}}}}}}},"i":{"a":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"27":{"tf":1.0}}}},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":4,"docs":{"17":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":2,"docs":{"2":{"tf":1.0},"29":{"tf":1.0}}}},"w":{"(":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"q":{")":{"/":{"df":0,"docs":{},"p":{"^":{"df":0,"docs":{},"m":{"df":2,"docs":{"28":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"_":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.4142135623730951}}}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":1,"docs":{"2":{"tf":1.0}}}},"y":{"df":2,"docs":{"1":{"tf":1.0},"17":{"tf":1.0}}}},"df":1,"docs":{"24":{"tf":1.0}},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":11,"docs":{"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.7320508075688772},"31":{"tf":1.0},"34":{"tf":1.4142135623730951}}}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.4142135623730951},"20":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"23":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"20":{"tf":1.0},"23":{"tf":1.4142135623730951}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"27":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":2,"docs":{"28":{"tf":1.0},"30":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"31":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"31":{"tf":1.4142135623730951}}}}}}}}},"x":{"[":{"df":0,"docs":{},"φ":{"_":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"^":{"df":0,"docs":{},"k":{"df":1,"docs":{"28":{"tf":1.0}}},"{":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}}},"_":{"0":{"df":1,"docs":{"4":{"tf":1.0}}},"df":2,"docs":{"0":{"tf":1.4142135623730951},"23":{"tf":1.0}},"λ":{"(":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"q":{"^":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":8,"docs":{"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"28":{"tf":1.0},"6":{"tf":1.7320508075688772}},"y":{"df":0,"docs":{},"z":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}}},"·":{"df":0,"docs":{},"φ":{"_":{"df":0,"docs":{},"β":{"^":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"₁":{"df":0,"docs":{},"x":{"df":1,"docs":{"6":{"tf":1.0}},"₂":{"df":0,"docs":{},"x":{"df":0,"docs":{},"₃":{"df":0,"docs":{},"x":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}},"y":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}},"z":{"(":{"df":0,"docs":{},"x":{"_":{"df":2,"docs":{"0":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}},"/":{"(":{"df":0,"docs":{},"q":{"df":0,"docs":{},"−":{"1":{")":{")":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"n":{"+":{"1":{"df":2,"docs":{"11":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"^":{"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}}},"df":1,"docs":{"2":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":2,"docs":{"27":{"tf":1.0},"7":{"tf":1.0}}}},"t":{"a":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}},"f":{"a":{"c":{":":{":":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"u":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}}}}},"df":0,"docs":{}}}},"p":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"breadcrumbs":{"root":{"a":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"26":{"tf":1.0},"30":{"tf":1.0}}}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":5,"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}},"b":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":5,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"26":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}}}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"32":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":7,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"26":{"tf":1.0},"30":{"tf":1.0}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"2":{"tf":1.0},"34":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}}}},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":5,"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":5,"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":9,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"9":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{},"m":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"g":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":4,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":6,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0}}}}}}}}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":4,"docs":{"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"n":{"df":0,"docs":{},"e":{"df":4,"docs":{"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"29":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":5,"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":5,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":4,"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0}}}}}},"p":{"(":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"30":{"tf":1.0}}}},"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"w":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":4,"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}}}}}},"s":{"a":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}}},"c":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.0}}}}}}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"m":{"df":10,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":5,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":2,"docs":{"11":{"tf":1.0},"6":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":4,"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"24":{"tf":1.0}}}}}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"df":5,"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}}}}},"title":{"root":{"a":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"26":{"tf":1.0},"30":{"tf":1.0}}}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}},"b":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"26":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}}}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"31":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"32":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"17":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"26":{"tf":1.0},"30":{"tf":1.0}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"2":{"tf":1.0},"34":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}}}},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"12":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"9":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{},"m":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"g":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"10":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":2,"docs":{"12":{"tf":1.0},"20":{"tf":1.0}}}}}}}}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"31":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"31":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"29":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"p":{"(":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"30":{"tf":1.0}}}},"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"w":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"s":{"a":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}}},"c":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.0}}}}}}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"m":{"df":4,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":2,"docs":{"11":{"tf":1.0},"6":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"24":{"tf":1.0}}}}}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));