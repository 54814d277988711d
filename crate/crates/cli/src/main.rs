//! `msta`: identity verification and point/twistor computations on the
//! command line.
//!
//! Subcommands print single-line JSON on stdout; diagnostics go to
//! stderr. Exit codes: 0 success, 1 domain/shape failure, 2 usage or I/O
//! error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use msta_core::conformal::{conformal_point, extract_coordinates};
use msta_core::cosmo::{bang_time, distance, distance_closed_form, point_twistor, Space};
use msta_core::twistor::{
    bargmann_wigner_decompose, is_event, solve_incidence, valence2, Locus, Twistor,
};
use msta_core::verify::{run_suite, VerifyConfig};
use msta_core::{ComplexFourVector, Error as CoreError, FourVector};

#[derive(Parser)]
#[command(
    name = "msta",
    version,
    about = "Two-particle spacetime algebra: verified Clifford kernel, conformal points, \
             twistor incidence, cosmological distances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity suite and emit a JSON report (exit 0 iff all pass).
    Verify {
        /// Only run checks whose id contains this substring.
        #[arg(long)]
        filter: Option<String>,
        /// Seed for the randomized checks.
        #[arg(long, env = "MSTA_SEED", default_value_t = 42)]
        seed: u64,
        /// Also write the JSON report to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override every per-check tolerance.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Embed a position as a two-particle conformal state.
    Point {
        /// Position `t,x,y,z`, or `t,x,y,z;ts,xs,ys,zs` when complexified.
        #[arg(long, allow_hyphen_values = true)]
        r: ComplexFourVector,
        /// Overall scale, the V-W factor.
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        scale: f64,
    },
    /// Distance between two points of the selected space.
    Distance {
        /// minkowski | ds | ads
        #[arg(long)]
        space: Space,
        #[arg(long, allow_hyphen_values = true)]
        q: FourVector,
        #[arg(long, allow_hyphen_values = true)]
        r: FourVector,
    },
    /// Solve the incidence of two twistors and decompose the result.
    Incidence {
        /// First twistor as `w0,w1,w2,w3|p0,p1,p2,p3`.
        #[arg(long, allow_hyphen_values = true)]
        z: Twistor,
        /// Second twistor in the same format.
        #[arg(long, allow_hyphen_values = true)]
        x: Twistor,
        /// Evaluate the fields at this observer position instead of the origin.
        #[arg(long, allow_hyphen_values = true)]
        observer: Option<ComplexFourVector>,
        /// Divide out the spin-frame factor before decomposing.
        #[arg(long)]
        normalize: bool,
    },
    /// Cosmic-time reading of a point against the bang twistor.
    Bang {
        #[arg(long, allow_hyphen_values = true)]
        r: FourVector,
    },
}

#[derive(Serialize)]
struct SixOut {
    #[serde(rename = "T")]
    t: f64,
    #[serde(rename = "V")]
    v: f64,
    #[serde(rename = "W")]
    w: f64,
    #[serde(rename = "X")]
    x: f64,
    #[serde(rename = "Y")]
    y: f64,
    #[serde(rename = "Z")]
    z: f64,
}

#[derive(Serialize)]
struct PointOut {
    state: String,
    scale: f64,
    six: Option<SixOut>,
    four: Option<[f64; 4]>,
}

#[derive(Serialize)]
struct DistanceOut {
    distance: f64,
    method: &'static str,
    crosscheck: &'static str,
    abs_err: f64,
}

#[derive(Serialize)]
struct SolutionOut {
    r: [f64; 4],
    s: [f64; 4],
}

#[derive(Serialize)]
struct KleinGordonOut {
    alpha: f64,
    beta: f64,
    theta: f64,
    mu: f64,
    u: [f64; 4],
    v: [f64; 4],
    charged: bool,
}

#[derive(Serialize)]
struct IncidenceOut {
    solution: SolutionOut,
    event: bool,
    spin_frame_factor: [f64; 2],
    kg: KleinGordonOut,
}

#[derive(Serialize)]
struct BangOut {
    bang_time: [f64; 2],
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<CoreError> for Failure {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::GradeOutOfRange(_) | CoreError::InvalidCurvature(_) => {
                Failure::Usage(err.to_string())
            }
            _ => Failure::Domain(err.to_string()),
        }
    }
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("serializable output")
    );
}

/// Collapse negative zeros so reports do not depend on the sign of a zero.
fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn clean4(v: [f64; 4]) -> [f64; 4] {
    v.map(clean)
}

fn cmd_verify(
    filter: Option<String>,
    seed: u64,
    out: Option<PathBuf>,
    tolerance: Option<f64>,
) -> Result<ExitCode, Failure> {
    let cfg = VerifyConfig {
        seed,
        filter,
        tolerance_override: tolerance,
    };
    let records = run_suite(&cfg);
    for record in &records {
        eprintln!(
            "{} {}: {} = {} (err {:.3e}, tol {:.1e})",
            if record.pass { "ok  " } else { "FAIL" },
            record.id,
            record.lhs,
            record.rhs,
            record.max_abs_err,
            record.tolerance
        );
    }
    let report = serde_json::to_string(&records).expect("serializable report");
    println!("{report}");
    if let Some(path) = out {
        fs::write(&path, format!("{report}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let failed = records.iter().filter(|r| !r.pass).count();
    if failed > 0 {
        eprintln!("{failed} check(s) failed");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_point(r: ComplexFourVector, scale: f64) -> Result<ExitCode, Failure> {
    let point = conformal_point(r, scale);
    let is_real = r.s == FourVector::ZERO;
    let coords = if is_real {
        Some(extract_coordinates(&point)?)
    } else {
        None
    };
    let out = PointOut {
        state: point.state.to_string(),
        scale,
        six: coords.as_ref().map(|c| SixOut {
            t: clean(c.six.t),
            v: clean(c.six.v),
            w: clean(c.six.w),
            x: clean(c.six.x),
            y: clean(c.six.y),
            z: clean(c.six.z),
        }),
        four: coords.and_then(|c| c.four).map(|f| clean4(f.components())),
    };
    emit(&out);
    Ok(ExitCode::SUCCESS)
}

fn cmd_distance(space: Space, q: FourVector, r: FourVector) -> Result<ExitCode, Failure> {
    let d = distance(space, &point_twistor(q, 1.0), &point_twistor(r, 1.0))?;
    let closed = distance_closed_form(space, q, r)?;
    emit(&DistanceOut {
        distance: clean(d),
        method: "twistor-ratio",
        crosscheck: "closed-form",
        abs_err: (d - closed).abs(),
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_incidence(
    z: Twistor,
    x: Twistor,
    observer: Option<ComplexFourVector>,
    normalize: bool,
) -> Result<ExitCode, Failure> {
    let solution = solve_incidence(&z, &x)?;
    let mut r12 = valence2(&z, &x, observer.unwrap_or(ComplexFourVector::ZERO));
    let frame = r12.spin_frame_factor()?;
    if normalize {
        r12 = r12.normalized()?;
    }
    let event = match is_event(&r12)? {
        Locus::Finite { event, .. } => event,
        Locus::Infinite => {
            return Err(Failure::Domain(
                "incidence point lies at infinity".to_string(),
            ))
        }
    };
    let kg = bargmann_wigner_decompose(&r12.state)?;
    emit(&IncidenceOut {
        solution: SolutionOut {
            r: clean4(solution.r.components()),
            s: clean4(solution.s.components()),
        },
        event,
        spin_frame_factor: [clean(frame.re), clean(frame.im)],
        kg: KleinGordonOut {
            alpha: clean(kg.alpha),
            beta: clean(kg.beta),
            theta: clean(kg.theta),
            mu: clean(kg.mu),
            u: clean4(kg.u.components()),
            v: clean4(kg.v.components()),
            charged: kg.is_charged(),
        },
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_bang(r: FourVector) -> Result<ExitCode, Failure> {
    let value = bang_time(&point_twistor(r, 1.0));
    emit(&BangOut {
        bang_time: [clean(value.re), clean(value.im)],
    });
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            filter,
            seed,
            out,
            tolerance,
        } => cmd_verify(filter, seed, out, tolerance),
        Command::Point { r, scale } => cmd_point(r, scale),
        Command::Distance { space, q, r } => cmd_distance(space, q, r),
        Command::Incidence {
            z,
            x,
            observer,
            normalize,
        } => cmd_incidence(z, x, observer, normalize),
        Command::Bang { r } => cmd_bang(r),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
