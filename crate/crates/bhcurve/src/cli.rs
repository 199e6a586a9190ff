//! Implementation of the `bh` command-line interface.
//!
//! Each subcommand maps to one library module, runs its verification
//! checks, and emits a [`Report`](crate::report::Report) in text or JSON.
//! Exit codes: 0 when every check passes, 1 when a verification fails
//! (for example under one of the `--mutate` flags), 2 on usage or input
//! errors.

use clap::{Parser, Subcommand, ValueEnum};

use crate::field::{parse_poly_text, Field, PrimePower};
use crate::poly::P1Point;
use crate::report::Report;
use crate::{aut, cover, curve, lattice};
use crate::{Error, Result};

/// Largest field size the tangent census will sweep from the CLI.
const SCAN_GATE: u64 = 6561;

#[derive(Parser, Debug)]
#[command(
    name = "bh",
    version,
    about = "Exact verification toolkit for the Ballico-Hefez curve, its cyclic covers, and the two supersingular K3 lattices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Modulus presenting the quadratic working field, as a polynomial in
    /// x (e.g. "x^2+1"); requires prime q.
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// Seed for sampled checks; recorded in the report.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Enable the slow sizes q = 49 and 81.
    #[arg(long, global = true)]
    pub slow: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum K3Case {
    Quartic,
    Sextic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum K3Mode {
    Computed,
    Reference,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Construct the curve; verify the defining-form, dual-conic and
    /// Coxeter-model identities.
    Curve {
        #[arg(long)]
        q: u32,
        /// Additionally re-verify the defining form pointwise on the
        /// image of P^1(F_{q^2}).
        #[arg(long)]
        verify: bool,
        /// Perturb one coefficient of the defining form; the identity
        /// checks must then fail.
        #[arg(long)]
        mutate: bool,
    },
    /// Count the nodes and certify their ordinary-node structure.
    Nodes {
        #[arg(long)]
        q: u32,
    },
    /// Classify tangent lines over P^1(F_{q^ext}), or one parameter.
    Tangent {
        #[arg(long)]
        q: u32,
        /// Degree of the extension swept by the census.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=4))]
        ext: u32,
        /// Classify only this parameter (element text such as "a+1", or
        /// "inf").
        #[arg(long)]
        param: Option<String>,
    },
    /// Audit the PGL_2(F_q) action and its lift to the plane.
    Aut {
        #[arg(long)]
        q: u32,
        /// Corrupt one entry of every lifted matrix; the audit must then
        /// fail.
        #[arg(long)]
        mutate: bool,
    },
    /// Build the cyclic cover w^d = F and certify its singular points.
    Cover {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
    },
    /// Verify the unirationality identity chain for the cover.
    Unirational {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
        /// Flip the sign in the y-formula; the identities must then fail.
        #[arg(long)]
        mutate: bool,
    },
    /// Split the cover over every tangent line with parameter in
    /// P^1(F_{q^2}).
    Split {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
    },
    /// Reproduce the Neron-Severi Gram matrices of the two supersingular
    /// K3 cases.
    K3 {
        #[arg(long, value_enum)]
        case: K3Case,
        #[arg(long, value_enum, default_value_t = K3Mode::Computed)]
        mode: K3Mode,
    },
}

/// Parse `argv` and run. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.cmd {
        Cmd::Curve { q, verify, mutate } => cmd_curve(cli, *q, *verify, *mutate),
        Cmd::Nodes { q } => cmd_nodes(cli, *q),
        Cmd::Tangent { q, ext, param } => cmd_tangent(cli, *q, *ext, param.as_deref()),
        Cmd::Aut { q, mutate } => cmd_aut(cli, *q, *mutate),
        Cmd::Cover { q, d } => cmd_cover(cli, *q, *d),
        Cmd::Unirational { q, d, mutate } => cmd_unirational(cli, *q, *d, *mutate),
        Cmd::Split { q, d } => cmd_split(cli, *q, *d),
        Cmd::K3 { case, mode } => cmd_k3(cli, *case, *mode),
    }
}

fn prime_power(qv: u32, slow: bool) -> Result<PrimePower> {
    let q = PrimePower::new(qv)?;
    q.check_supported(slow)?;
    Ok(q)
}

/// The quadratic working field `F_{q^2}`, honoring `--modulus` when `q`
/// is prime.
fn quadratic_field(q: &PrimePower, modulus: &Option<String>) -> Result<Field> {
    match modulus {
        None => Ok(Field::extension_of(q, 2)),
        Some(text) => {
            if q.nu != 1 {
                return Err(Error::ModulusRequiresPrimeQ);
            }
            let coeffs = parse_poly_text(text, 'x')?;
            let f = Field::with_modulus(q.p, &coeffs)?;
            let want = q.q as u64 * q.q as u64;
            if f.order() != want {
                return Err(Error::WrongFieldOrder(want));
            }
            Ok(f)
        }
    }
}

/// Render a monic modulus (low coefficients first) as a polynomial in x.
fn modulus_text(field: &Field) -> String {
    let cs = field.modulus();
    let mut terms: Vec<String> = Vec::new();
    for (i, &c) in cs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}*x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}*x^{i}"),
        };
        terms.push(t);
    }
    terms.join(" + ")
}

fn cmd_curve(cli: &Cli, qv: u32, verify: bool, mutate: bool) -> Result<Report> {
    let q = prime_power(qv, cli.slow)?;
    let field = Field::of_order(&q);
    let mut r = Report::new("curve");
    r.param("q", q.q);
    r.param("p", q.p);

    let phi = curve::bh_parametrization(&q, &field);
    r.artifact(
        "parametrization",
        vec![
            phi.coords[0].format(&field, "s", "t"),
            phi.coords[1].format(&field, "s", "t"),
            phi.coords[2].format(&field, "s", "t"),
        ],
    );
    r.check(
        "parametrization-degree",
        phi.degree() == q.q as usize + 1,
        format!("deg = q + 1 = {}", q.q + 1),
    );

    let form = if mutate {
        curve::perturbed_form(&q, &field)
    } else {
        curve::defining_form(&q, &field)
    };
    r.artifact("defining_form", form.format(&field, &["x0", "x1", "x2"]));
    let vanishes = curve::form_vanishes_on_curve(&q, &field, &form);
    r.check(
        "defining-form-vanishes",
        vanishes,
        if mutate {
            "perturbed form composed with the parametrization"
        } else {
            "F(phi(s, t)) = 0 as an exact binary form"
        },
    );

    if verify {
        let ext = Field::extension_of(&q, 2);
        let phi2 = curve::bh_parametrization(&q, &ext);
        let form2 = if mutate {
            curve::perturbed_form(&q, &ext)
        } else {
            curve::defining_form(&q, &ext)
        };
        let pointwise = P1Point::all(&ext).into_iter().all(|p| {
            let img = phi2.eval(&ext, &p);
            ext.is_zero(&form2.eval(&ext, img.coords()))
        });
        r.check(
            "pointwise-vanishing",
            pointwise,
            format!("F = 0 on the image of all of P^1(F_{})", q.q as u64 * q.q as u64),
        );
    }

    let dual = curve::dual_conic_check(&q, &field);
    r.check(
        "dual-conic",
        dual.all_ok(),
        "tangent coefficients lie on X0 X1 = X2^2, factor through Frobenius, residual map separable",
    );
    r.check(
        "coxeter-model",
        curve::coxeter_model_check(&q, &field),
        "(s + t)^(q+1) - s^(q+1) - t^(q+1) equals the third coordinate pair exactly",
    );
    Ok(r)
}

fn cmd_nodes(cli: &Cli, qv: u32) -> Result<Report> {
    let q = prime_power(qv, cli.slow)?;
    let field = quadratic_field(&q, &cli.modulus)?;
    let mut r = Report::new("nodes");
    r.param("q", q.q);
    r.param("field", format!("F_{}", field.order()));
    r.param("modulus", modulus_text(&field));

    let rep = curve::nodes_verified(&q, &field)?;
    let expected = (q.q as u64 * (q.q as u64 - 1)) / 2;
    r.check(
        "node-count",
        rep.count_ok,
        format!("{} nodes = (q^2 - q)/2 = {}", rep.records.len(), expected),
    );
    r.check(
        "images-singular",
        rep.images_singular,
        "all partial derivatives of F vanish at every node image",
    );
    r.check(
        "images-distinct",
        rep.images_distinct,
        "conjugate parameter pairs map to distinct points",
    );
    r.check(
        "branch-directions-distinct",
        rep.branch_dirs_distinct,
        "the two branches through each node have independent directions",
    );
    r.check(
        "smooth-elsewhere",
        rep.smooth_elsewhere,
        "no other image point of P^1(F_{q^2}) is singular",
    );
    let listing: Vec<String> = rep
        .records
        .iter()
        .map(|n| {
            format!(
                "tau = {}, image = {}",
                field.format(&n.tau),
                n.image.format(&field)
            )
        })
        .collect();
    r.artifact("nodes", listing);
    Ok(r)
}

fn cmd_tangent(cli: &Cli, qv: u32, ext: u32, param: Option<&str>) -> Result<Report> {
    let q = prime_power(qv, cli.slow)?;
    let size = (q.q as u64).pow(ext);
    if size > SCAN_GATE {
        return Err(Error::ScanTooLarge(size));
    }
    let field = Field::extension_of(&q, ext as usize);
    let mut r = Report::new("tangent");
    r.param("q", q.q);
    r.param("ext", ext);
    r.param("field", format!("F_{}", field.order()));

    if let Some(text) = param {
        let p = if text == "inf" {
            P1Point::Infinity
        } else {
            P1Point::Finite(field.parse(text)?)
        };
        r.param("param", p.format(&field));
        let rep = curve::tangent_trichotomy(&q, &field, &p)?;
        let class = match rep.class {
            curve::TangentClass::RationalContact => "rational-contact",
            curve::TangentClass::NodeTangent => "node-tangent",
            curve::TangentClass::Split => "split",
        };
        r.check(
            "trichotomy-verified",
            true,
            format!("class = {class}, contact orders sum to q + 1 = {}", q.q + 1),
        );
        r.artifact("line", rep.line.format(&field));
        let contacts: Vec<String> = rep
            .contacts
            .iter()
            .map(|(p, img, ord)| {
                format!(
                    "param = {}, image = {}, order = {}",
                    p.format(&field),
                    img.format(&field),
                    ord
                )
            })
            .collect();
        r.artifact("contacts", contacts);
        return Ok(r);
    }

    let mut rational = 0u64;
    let mut node = 0u64;
    let mut split = 0u64;
    for p in P1Point::all(&field) {
        let rep = curve::tangent_trichotomy(&q, &field, &p)?;
        match rep.class {
            curve::TangentClass::RationalContact => rational += 1,
            curve::TangentClass::NodeTangent => node += 1,
            curve::TangentClass::Split => split += 1,
        }
    }
    let qq = q.q as u64;
    let expect_rational = qq + 1;
    let expect_node = if ext % 2 == 0 { qq * qq - qq } else { 0 };
    let expect_split = size + 1 - expect_rational - expect_node;
    r.check(
        "rational-contacts",
        rational == expect_rational,
        format!("{rational} parameters in P^1(F_q) with a single contact of order q + 1"),
    );
    r.check(
        "node-tangents",
        node == expect_node,
        format!("{node} parameters in P^1(F_{{q^2}}) \\ P^1(F_q), orders (q, 1) at one node"),
    );
    r.check(
        "split-tangents",
        split == expect_split,
        format!("{split} parameters with a transversal second point phi(t^q)"),
    );
    let mut census = std::collections::BTreeMap::new();
    census.insert("rational-contact".to_string(), rational);
    census.insert("node-tangent".to_string(), node);
    census.insert("split".to_string(), split);
    r.artifact("census", census);
    Ok(r)
}

fn cmd_aut(cli: &Cli, qv: u32, mutate: bool) -> Result<Report> {
    let q = prime_power(qv, cli.slow)?;
    let field = Field::of_order(&q);
    let mut r = Report::new("aut");
    r.param("q", q.q);
    r.param("group-order", aut::pgl2_order(&q));

    if mutate {
        let detected = aut::audit_detects_corruption(&q, &field)?;
        r.check(
            "lifts-commute",
            !detected,
            if detected {
                "the corrupted lift fails equivariance for every group element"
            } else {
                "corruption was not detected - the audit is broken"
            },
        );
        return Ok(r);
    }

    let seed = cli.seed.unwrap_or(1);
    let audit = aut::audit(&q, &field, seed, 200)?;
    match audit.mode {
        aut::AuditMode::Exhaustive => r.param("mode", "exhaustive"),
        aut::AuditMode::Sampled { seed, samples } => {
            r.param("mode", "sampled");
            r.param("seed", seed);
            r.param("samples", samples);
        }
    }
    r.check(
        "group-order",
        audit.group_order == audit.expected_order,
        format!("|PGL_2(F_q)| = q^3 - q = {}", audit.expected_order),
    );
    r.check(
        "lifts-commute",
        audit.lifts_commute,
        format!(
            "phi o g = lift(g) o phi verified symbolically for {} elements",
            audit.lifts_checked
        ),
    );
    r.check(
        "lift-injective",
        audit.lift_injective,
        "distinct group elements give projectively distinct lifts",
    );
    r.check(
        "homomorphism",
        audit.homomorphism_ok,
        format!(
            "lift(g h) proportional to lift(g) lift(h) on {} pairs",
            audit.pairs_checked
        ),
    );
    Ok(r)
}

fn cmd_cover(cli: &Cli, qv: u32, d: u32) -> Result<Report> {
    let q = prime_power(qv, cli.slow)?;
    let field = quadratic_field(&q, &cli.modulus)?;
    let mut r = Report::new("cover");
    r.param("q", q.q);
    r.param("d", d);

    let surf = cover::cover_surface(&q, d, &field)?;
    r.param("weight", surf.weight);
    r.artifact(
        "surface",
        surf.form.format(&field, &["w", "x0", "x1", "x2"]),
    );
    r.check(
        "weighted-degree",
        surf.form.weighted_degree() == q.q as u64 + 1,
        format!(
            "w^d - F is weighted-homogeneous of degree q + 1 = {} for weights ({}, 1, 1, 1)",
            q.q + 1,
            surf.weight
        ),
    );

    let sings = cover::node_singularities(&q, d, &field)?;
    let all_certified = sings.iter().all(cover::NodeSingularity::all_ok);
    r.check(
        "node-singularities",
        all_certified,
        format!(
            "{} singular points, each an A_{} point: the local quadratic part is a product of the two distinct branch tangents",
            sings.len(),
            d - 1
        ),
    );

    let proj = cover::projection_quadratic_check(&q, &field);
    r.check(
        "projection-quadratic",
        proj.satisfies_quadratic,
        "t and t^q both satisfy Z^2 - y(t) Z + x(t) = 0",
    );
    if let Some(ok) = proj.discriminant_is_square {
        r.check(
            "projection-discriminant",
            ok,
            "y^2 - 4x = (t^q - t)^2 identically (odd characteristic)",
        );
    }
    if let Some(ok) = proj.separable_char_two {
        r.check(
            "projection-separable",
            ok,
            "the quadratic in t^q is separable (characteristic 2)",
        );
    }
    let mut degrees = std::collections::BTreeMap::new();
    degrees.insert("separable_part".to_string(), 2u64);
    degrees.insert("inseparable_part".to_string(), q.q as u64);
    degrees.insert("total".to_string(), 2 * q.q as u64);
    r.artifact("projection_degrees", degrees);
    Ok(r)
}

fn cmd_unirational(cli: &Cli, qv: u32, d: u32, mutate: bool) -> Result<Report> {
    let q = prime_power(qv, cli.slow)?;
    let field = Field::new(q.p, 1)?;
    let mut r = Report::new("unirational");
    r.param("q", q.q);
    r.param("d", d);

    let rep = cover::unirationality_check(&q, d, &field, mutate)?;
    r.check(
        "telescoping",
        rep.telescoping_ok,
        "y - (t^q + t) = D and y - (t^(q^2) + t^q) = z^d D",
    );
    r.check(
        "main-identity",
        rep.main_identity_ok,
        "(y - t^q - t)^q (y - t^(q^2) - t^q) = z^d D^(q+1)",
    );
    r.check(
        "pullback-identity",
        rep.pullback_identity_ok,
        format!(
            "F(1, T^q Y - T^(2q), Y) = c * (Y - T^q - T)^q (Y - T^(q^2) - T^q), c = {}",
            field.format(&rep.pullback_constant)
        ),
    );
    r.check(
        "composition",
        rep.composition_ok,
        "substituting t and y(z, t) reproduces c z^d D^(q+1)",
    );
    r.check(
        "power-step",
        rep.power_step_ok,
        "(z D^((q+1)/d))^d = z^d D^(q+1)",
    );
    match (rep.unit_extension, &rep.unit_root) {
        (Some(1), Some(u)) => {
            let f2 = Field::extension_of(&q, 2);
            r.check(
                "unit-root",
                true,
                format!("u = {} satisfies u^d = c in F_{}", f2.format(u), f2.order()),
            );
        }
        (Some(m), _) => r.check(
            "unit-root",
            true,
            format!("c becomes a d-th power over F_(q^(2*{m}))"),
        ),
        (None, _) => r.check("unit-root", false, "no pullback constant to extract"),
    }
    Ok(r)
}

fn cmd_split(cli: &Cli, qv: u32, d: u32) -> Result<Report> {
    let q = prime_power(qv, cli.slow)?;
    let field = quadratic_field(&q, &cli.modulus)?;
    let mut r = Report::new("split");
    r.param("q", q.q);
    r.param("d", d);
    r.param("field", format!("F_{}", field.order()));
    r.param("modulus", modulus_text(&field));

    let reports = cover::fiber_splitting_all(&q, d, &field)?;
    let expected_lines = field.order() + 1;
    r.check(
        "line-count",
        reports.len() as u64 == expected_lines,
        format!("{} tangent lines, one per point of P^1(F_{{q^2}})", reports.len()),
    );
    r.check(
        "full-contact",
        reports.iter().all(|s| s.full_contact),
        "every restriction is unit * ell^(q+1) for a linear form ell",
    );
    let all_split_here = reports.iter().all(|s| s.splitting_extension == 1);
    r.check(
        "splitting-extensions-computed",
        reports.iter().all(|s| s.splitting_extension >= 1),
        if all_split_here {
            "every unit is already a d-th power over F_{q^2}".to_string()
        } else {
            "some preimages split only after a further extension".to_string()
        },
    );
    let total: usize = reports.iter().map(cover::SplitReport::components).sum();
    r.check(
        "components",
        reports
            .iter()
            .all(|s| s.splitting_extension != 1 || s.components() == d as usize),
        format!("{total} components over F_{{q^2}} in total"),
    );
    let listing: Vec<String> = reports
        .iter()
        .map(|s| {
            format!(
                "param = {}, rational = {}, unit = {}, m = {}, components = {}",
                s.param.format(&field),
                s.rational,
                field.format(&s.unit),
                s.splitting_extension,
                s.components()
            )
        })
        .collect();
    r.artifact("lines", listing);
    Ok(r)
}

fn cmd_k3(cli: &Cli, case: K3Case, mode: K3Mode) -> Result<Report> {
    let (name, p, want_det, reference): (&str, u32, i64, &[[i64; 22]; 22]) = match case {
        K3Case::Quartic => ("quartic", 3, -9, &lattice::QUARTIC_REFERENCE),
        K3Case::Sextic => ("sextic", 5, -25, &lattice::SEXTIC_REFERENCE),
    };
    let mut r = Report::new("k3");
    r.param("case", name);

    if mode == K3Mode::Reference {
        r.param("mode", "reference");
        let gram: Vec<Vec<i64>> = reference.iter().map(|row| row.to_vec()).collect();
        let det_big = lattice::bareiss_det(&gram);
        let det = lattice::det_to_i64(&det_big)?;
        let inertia = lattice::inertia(&gram);
        let artin = lattice::artin_invariant(&det_big, p)?;
        r.check("determinant", det == want_det, format!("det = {det}"));
        r.check(
            "inertia",
            inertia == (1, 21, 0),
            format!("signature (+, -, 0) = {inertia:?}"),
        );
        r.check("artin-invariant", artin == 1, format!("sigma = {artin}"));
        r.artifact("gram", gram);
        r.artifact("det", det);
        return Ok(r);
    }

    r.param("mode", "computed");
    let q = PrimePower::new(p).expect("3 and 5 are prime");
    let field = quadratic_field(&q, &cli.modulus)?;
    r.param("modulus", modulus_text(&field));
    let rep = match case {
        K3Case::Quartic => lattice::k3_quartic(&field)?,
        K3Case::Sextic => lattice::k3_sextic(&field)?,
    };
    r.param("q", rep.q);
    r.param("d", rep.d);
    r.check(
        "gram-matches-reference",
        rep.matches_reference,
        "computed Gram matrix equals the reference table entrywise",
    );
    r.check(
        "determinant",
        rep.det == want_det,
        format!("det = {} = -p^2", rep.det),
    );
    r.check(
        "inertia",
        rep.inertia == (1, 21, 0),
        format!("signature (+, -, 0) = {:?}", rep.inertia),
    );
    r.check(
        "artin-invariant",
        rep.artin_invariant == 1,
        format!("sigma = {}", rep.artin_invariant),
    );
    r.artifact("labels", rep.labels.clone());
    r.artifact("gram", rep.gram.clone());
    r.artifact("det", rep.det);
    r.artifact("inertia", format!("{:?}", rep.inertia));
    r.artifact("artin_invariant", rep.artin_invariant);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cmd(args: &[&str]) -> i32 {
        run(args.iter().map(|s| s.to_string()))
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_cmd(&["bh", "curve", "--q", "3"]), 0);
        assert_eq!(run_cmd(&["bh", "curve", "--q", "3", "--mutate"]), 1);
        // 6 is not a prime power
        assert_eq!(run_cmd(&["bh", "curve", "--q", "6"]), 2);
        // unknown flag
        assert_eq!(run_cmd(&["bh", "curve", "--nope"]), 2);
        // q too large without --slow
        assert_eq!(run_cmd(&["bh", "curve", "--q", "49"]), 2);
    }

    #[test]
    fn reports_assemble_without_failures() {
        let cli = Cli::try_parse_from(["bh", "nodes", "--q", "4"]).unwrap();
        let rep = dispatch(&cli).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.params["q"], "4");
        // (16 - 4)/2 = 6 nodes
        assert!(rep.checks[0].details.contains("6 nodes"));
    }

    #[test]
    fn tangent_census_and_single_param() {
        let cli = Cli::try_parse_from(["bh", "tangent", "--q", "2", "--ext", "3"]).unwrap();
        let rep = dispatch(&cli).unwrap();
        assert!(rep.passed());
        // P^1(F_8): 3 rational contacts, no nodes, 6 split
        assert_eq!(rep.artifacts["census"]["rational-contact"], 3);
        assert_eq!(rep.artifacts["census"]["node-tangent"], 0);
        assert_eq!(rep.artifacts["census"]["split"], 6);

        let cli = Cli::try_parse_from(["bh", "tangent", "--q", "3", "--param", "a"]).unwrap();
        let rep = dispatch(&cli).unwrap();
        assert!(rep.passed());
        assert!(rep.checks[0].details.contains("node-tangent"));
    }

    #[test]
    fn k3_modes() {
        for case in ["quartic", "sextic"] {
            let cli =
                Cli::try_parse_from(["bh", "k3", "--case", case, "--mode", "reference"]).unwrap();
            let rep = dispatch(&cli).unwrap();
            assert!(rep.passed(), "reference mode for {case}");
        }
        let cli = Cli::try_parse_from(["bh", "k3", "--case", "quartic"]).unwrap();
        let rep = dispatch(&cli).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.artifacts["det"], -9);
    }

    #[test]
    fn json_reports_round_trip_and_are_deterministic() {
        let cli = Cli::try_parse_from(["bh", "aut", "--q", "3", "--format", "json"]).unwrap();
        let a = dispatch(&cli).unwrap();
        let b = dispatch(&cli).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let parsed = crate::report::Report::from_json(&a.to_json()).unwrap();
        assert_eq!(parsed, a);
    }

    #[test]
    fn custom_modulus_is_validated() {
        let cli = Cli::try_parse_from([
            "bh", "k3", "--case", "sextic", "--modulus", "x^2+3",
        ])
        .unwrap();
        let rep = dispatch(&cli).unwrap();
        assert!(rep.passed());

        // x^2 - 1 is reducible
        let cli = Cli::try_parse_from([
            "bh", "k3", "--case", "quartic", "--modulus", "x^2-1",
        ])
        .unwrap();
        assert!(dispatch(&cli).is_err());

        // prime powers keep the default modulus
        let cli = Cli::try_parse_from([
            "bh", "nodes", "--q", "4", "--modulus", "x^2+x+1",
        ])
        .unwrap();
        assert_eq!(dispatch(&cli).unwrap_err(), Error::ModulusRequiresPrimeQ);
    }

    #[test]
    fn mutations_fail_with_exit_one() {
        assert_eq!(run_cmd(&["bh", "aut", "--q", "3", "--mutate"]), 1);
        assert_eq!(
            run_cmd(&["bh", "unirational", "--q", "3", "--d", "4", "--mutate"]),
            1
        );
    }

    #[test]
    fn split_reports_component_totals() {
        let cli = Cli::try_parse_from(["bh", "split", "--q", "3", "--d", "4"]).unwrap();
        let rep = dispatch(&cli).unwrap();
        assert!(rep.passed());
        let detail = &rep
            .checks
            .iter()
            .find(|c| c.name == "components")
            .unwrap()
            .details;
        assert!(detail.contains("40 components"));
    }
}
