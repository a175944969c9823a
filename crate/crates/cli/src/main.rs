mod error;
mod manifest;

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gcf_core::baseline::{laplacian_smooth, taubin_smooth, DEFAULT_LAMBDA, DEFAULT_MU};
use gcf_core::coloring::greedy_domain_decomposition;
use gcf_core::curvature::{gaussian_curvature, gaussian_curvature_energy};
use gcf_core::filter::{gcf_filter, FilterConfig, DEGENERACY_TOLERANCE};
use gcf_core::mesh::{load_mesh, save_mesh_data, MeshData, MeshFormat};
use gcf_core::metrics::{
    curvature_histogram, curvature_histogram_on, kld, msae, vertex_distances, DEFAULT_BINS,
    DEFAULT_CLIP_PERCENTILE, KLD_EPSILON,
};
use gcf_core::noise::{add_noise, NoiseConfig, NoiseMode};
use gcf_core::{generate, MeshError, MeshTopology, TriangleMesh};
use serde::Serialize;
use serde_json::json;

use error::{invalid, Classify, CliResult};
use manifest::RunManifest;

#[derive(Debug, Parser)]
#[command(
    name = "gcf",
    version,
    about = "Gaussian curvature filtering for triangle meshes"
)]
struct Cli {
    /// Write a JSON run manifest to this path.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the curvature filter.
    Filter(FilterArgs),
    /// Compare a mesh against a reference with the same connectivity.
    Metrics(MetricsArgs),
    /// Add seeded Gaussian noise.
    Noise(NoiseArgs),
    /// Generate a test mesh.
    Gen(GenArgs),
    /// Export the domain decomposition as a per-vertex colored PLY.
    Color(IoArgs),
    /// Export per-vertex Gaussian curvature as CSV or PLY.
    Curvature(IoArgs),
    /// Run a Laplacian or Taubin baseline smoother.
    Smooth(SmoothArgs),
    /// Time the filter and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct IoArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct FilterArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long)]
    iters: usize,
    /// Worker threads; 0 picks one per core, 1 runs sequentially.
    #[arg(long, env = "GCF_THREADS", default_value_t = 0)]
    threads: usize,
    /// Write the energy after each iteration as CSV.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MetricsArgs {
    #[arg(long = "ref")]
    reference: PathBuf,
    #[arg(long)]
    test: PathBuf,
    #[arg(long, default_value_t = DEFAULT_BINS)]
    bins: usize,
    /// Percentile of |K| that sets the histogram range.
    #[arg(long, default_value_t = DEFAULT_CLIP_PERCENTILE)]
    clip: f64,
    /// Write both curvature histograms as CSV.
    #[arg(long)]
    histogram: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NoiseDirection {
    AlongNormal,
    Isotropic,
}

#[derive(Debug, Args)]
struct NoiseArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Standard deviation as a multiple of the mean edge length.
    #[arg(long)]
    sigma: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = NoiseDirection::AlongNormal)]
    mode: NoiseDirection,
}

#[derive(Debug, Clone, Copy, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Icosphere,
    Cylinder,
    Cone,
    Cube,
    Grid,
    Tetrahedron,
}

#[derive(Debug, Args, Serialize)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(short, long)]
    #[serde(skip)]
    output: PathBuf,
    /// Icosphere subdivision level.
    #[arg(long, default_value_t = 3)]
    subdiv: u32,
    /// Cylinder and cone segments around the axis.
    #[arg(long, default_value_t = 64)]
    segments: usize,
    /// Cylinder and cone rings along the axis.
    #[arg(long, default_value_t = 32)]
    stacks: usize,
    /// Cube cells per face edge, grid cells per side.
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// Grid spacing and tetrahedron edge length.
    #[arg(long, default_value_t = 1.0)]
    spacing: f64,
}

#[derive(Debug, Clone, Copy, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum Method {
    Laplacian,
    Taubin,
}

#[derive(Debug, Args)]
struct SmoothArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long, value_enum, default_value_t = Method::Laplacian)]
    method: Method,
    #[arg(long, default_value_t = 10)]
    iters: usize,
    #[arg(long, default_value_t = DEFAULT_LAMBDA)]
    lambda: f64,
    #[arg(long, default_value_t = DEFAULT_MU, allow_hyphen_values = true)]
    mu: f64,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Meshes to time.
    #[arg(short, long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    #[arg(long, value_delimiter = ',', default_value = "10,40,100")]
    iters: Vec<usize>,
    #[arg(long, env = "GCF_THREADS", value_delimiter = ',', default_value = "1")]
    threads: Vec<usize>,
    /// CSV destination; standard output if absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn load(path: &Path, manifest: &mut RunManifest) -> CliResult<TriangleMesh> {
    manifest.inputs.push(path.to_path_buf());
    manifest
        .time("load", || load_mesh(path, None))
        .input(format!("reading {}", path.display()))
}

fn save(data: &MeshData, path: &Path, manifest: &mut RunManifest) -> CliResult<()> {
    manifest.outputs.push(path.to_path_buf());
    let result = manifest.time("save", || {
        save_mesh_data(
            &data.mesh,
            path,
            None,
            data.scalars.as_deref(),
            data.colors.as_deref(),
        )
    });
    let context = format!("writing {}", path.display());
    match result {
        Err(e @ MeshError::Io(_)) => Err(e).input(context),
        other => other.invalid(context),
    }
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).input(format!("writing {}", path.display()))
}

fn filter(args: FilterArgs, m: &mut RunManifest) -> CliResult<()> {
    if args.iters == 0 {
        return invalid(
            "--iters must be at least 1\n\nUsage: gcf filter -i <IN> -o <OUT> --iters <N>",
        );
    }
    m.config = json!({
        "iterations": args.iters,
        "threads": args.threads,
        "degeneracy_tolerance": DEGENERACY_TOLERANCE,
        "schedule": "greedy domain decomposition",
    });
    let mesh = load(&args.io.input, m)?;
    let topo = m.time("topology", || MeshTopology::build(&mesh));
    let coloring = m.time("color", || greedy_domain_decomposition(&topo));
    let config = FilterConfig::new(args.iters)
        .with_threads(args.threads)
        .with_trace(args.trace.is_some());
    let (out, trace) = m
        .time("filter", || gcf_filter(&mesh, &topo, &coloring, &config))
        .invalid("filtering")?;
    save(&MeshData::new(out), &args.io.output, m)?;
    if let (Some(path), Some(trace)) = (&args.trace, trace) {
        let mut csv = String::from("iteration,gce\n");
        for (i, e) in trace.gce_per_iteration.iter().enumerate() {
            csv += &format!("{i},{e}\n");
        }
        write_text(path, &csv)?;
        m.outputs.push(path.clone());
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct MetricsReport {
    msae_deg: f64,
    gce: f64,
    d_mean: f64,
    d_max: f64,
    kld: f64,
    params: MetricsParams,
}

#[derive(Debug, Serialize)]
struct MetricsParams {
    bins: usize,
    clip_percentile: f64,
    histogram_range: f64,
    kld_epsilon: f64,
    kld_direction: &'static str,
    msae_excluded_faces: usize,
}

fn metrics(args: MetricsArgs, m: &mut RunManifest) -> CliResult<()> {
    let reference = load(&args.reference, m)?;
    let test = load(&args.test, m)?;
    if reference.faces() != test.faces() || reference.vertex_count() != test.vertex_count() {
        return invalid("reference and test meshes differ in connectivity");
    }
    let topo = m.time("topology", || MeshTopology::build(&reference));
    let report = m.time("metrics", || -> CliResult<MetricsReport> {
        let angle = msae(&test, &reference).invalid("angular error")?;
        let (d_mean, d_max) = vertex_distances(&test, &reference).invalid("vertex distances")?;
        let k_ref = gaussian_curvature(&reference, &topo);
        let k_test = gaussian_curvature(&test, &topo);
        let h_ref = curvature_histogram(&k_ref, args.bins, args.clip).invalid("histogram")?;
        let h_test = curvature_histogram_on(&k_test, &h_ref.bin_edges).invalid("histogram")?;
        let divergence = kld(&h_test, &h_ref).invalid("divergence")?;
        if let Some(path) = &args.histogram {
            let mut csv = String::from("bin_lo,bin_hi,ref,test\n");
            for (i, w) in h_ref.bin_edges.windows(2).enumerate() {
                csv += &format!("{},{},{},{}\n", w[0], w[1], h_ref.probs[i], h_test.probs[i]);
            }
            write_text(path, &csv)?;
        }
        Ok(MetricsReport {
            msae_deg: angle.degrees,
            gce: gaussian_curvature_energy(&k_test, false),
            d_mean,
            d_max,
            kld: divergence,
            params: MetricsParams {
                bins: args.bins,
                clip_percentile: args.clip,
                histogram_range: *h_ref.bin_edges.last().expect("bins exist"),
                kld_epsilon: KLD_EPSILON,
                kld_direction: "KL(test || ref)",
                msae_excluded_faces: angle.excluded_faces,
            },
        })
    })?;
    if let Some(path) = &args.histogram {
        m.outputs.push(path.clone());
    }
    m.config = serde_json::to_value(&report.params).expect("params serialize");
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(())
}

fn noise(args: NoiseArgs, m: &mut RunManifest) -> CliResult<()> {
    let mode = match args.mode {
        NoiseDirection::AlongNormal => NoiseMode::AlongNormal,
        NoiseDirection::Isotropic => NoiseMode::Isotropic,
    };
    let config = NoiseConfig::new(args.sigma, args.seed).with_mode(mode);
    m.seed = Some(args.seed);
    m.config = json!({ "sigma_factor": args.sigma, "mode": mode, "rng": "ChaCha8" });
    let mesh = load(&args.io.input, m)?;
    let topo = m.time("topology", || MeshTopology::build(&mesh));
    let out = m
        .time("noise", || add_noise(&mesh, &topo, &config))
        .invalid("adding noise")?;
    save(&MeshData::new(out), &args.io.output, m)
}

fn gen(args: GenArgs, m: &mut RunManifest) -> CliResult<()> {
    m.config = serde_json::to_value(&args).expect("args serialize");
    let mesh = m
        .time("generate", || match args.kind {
            Kind::Icosphere => generate::icosphere(args.subdiv),
            Kind::Cylinder => generate::cylinder(args.segments, args.stacks),
            Kind::Cone => generate::cone(args.segments, args.stacks),
            Kind::Cube => generate::cube(args.n),
            Kind::Grid => generate::grid(args.n, args.spacing),
            Kind::Tetrahedron => Ok(generate::tetrahedron(args.spacing)),
        })
        .invalid("generating mesh")?;
    save(&MeshData::new(mesh), &args.output, m)
}

/// Distinct colors for `count` labels: a fixed palette first, then a
/// golden-ratio hue walk with collisions skipped.
fn palette(count: usize) -> Vec<[u8; 3]> {
    const BASE: [[u8; 3]; 10] = [
        [230, 25, 75],
        [60, 180, 75],
        [0, 130, 200],
        [255, 225, 25],
        [245, 130, 48],
        [145, 30, 180],
        [70, 240, 240],
        [240, 50, 230],
        [128, 128, 0],
        [0, 0, 128],
    ];
    let mut colors: Vec<[u8; 3]> = BASE.iter().copied().take(count).collect();
    let mut seen: HashSet<[u8; 3]> = colors.iter().copied().collect();
    let mut hue = 0.0f64;
    while colors.len() < count {
        hue = (hue + 0.618_033_988_749_895) % 1.0;
        let c = hsv(hue, 0.65, 0.9);
        if seen.insert(c) {
            colors.push(c);
        }
    }
    colors
}

fn hsv(h: f64, s: f64, v: f64) -> [u8; 3] {
    let i = (h * 6.0).floor();
    let f = h * 6.0 - i;
    let (p, q, t) = (v * (1.0 - s), v * (1.0 - f * s), v * (1.0 - (1.0 - f) * s));
    let (r, g, b) = match i as u32 % 6 {
        0 => (v, t, p),
        1 => (q, v, p),
        2 => (p, v, t),
        3 => (p, q, v),
        4 => (t, p, v),
        _ => (v, p, q),
    };
    [
        (r * 255.0).round() as u8,
        (g * 255.0).round() as u8,
        (b * 255.0).round() as u8,
    ]
}

fn color(args: IoArgs, m: &mut RunManifest) -> CliResult<()> {
    if MeshFormat::from_extension(&args.output) != Some(MeshFormat::Ply) {
        return invalid("colored output must be a .ply file");
    }
    let mesh = load(&args.input, m)?;
    let topo = m.time("topology", || MeshTopology::build(&mesh));
    let coloring = m.time("color", || greedy_domain_decomposition(&topo));
    let colors = palette(coloring.len());
    m.config = json!({ "domains": coloring.len(), "max_degree": topo.max_degree() });
    let data = MeshData {
        scalars: Some(coloring.labels().iter().map(|&c| c as f64).collect()),
        colors: Some(coloring.labels().iter().map(|&c| colors[c]).collect()),
        mesh,
    };
    save(&data, &args.output, m)?;
    eprintln!(
        "{} domains (max degree {})",
        coloring.len(),
        topo.max_degree()
    );
    Ok(())
}

fn curvature(args: IoArgs, m: &mut RunManifest) -> CliResult<()> {
    let csv = args
        .output
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if !csv && MeshFormat::from_extension(&args.output) != Some(MeshFormat::Ply) {
        return invalid("curvature output must be a .csv or .ply file");
    }
    let mesh = load(&args.input, m)?;
    let topo = m.time("topology", || MeshTopology::build(&mesh));
    let field = m.time("curvature", || gaussian_curvature(&mesh, &topo));
    if csv {
        let mut text = String::from("vertex_index,k\n");
        for (i, k) in field.k.iter().enumerate() {
            text += &format!("{i},{k}\n");
        }
        m.outputs.push(args.output.clone());
        write_text(&args.output, &text)
    } else {
        let data = MeshData {
            scalars: Some(field.k),
            colors: None,
            mesh,
        };
        save(&data, &args.output, m)
    }
}

fn smooth(args: SmoothArgs, m: &mut RunManifest) -> CliResult<()> {
    m.config = json!({
        "method": args.method,
        "iterations": args.iters,
        "lambda": args.lambda,
        "mu": matches!(args.method, Method::Taubin).then_some(args.mu),
    });
    let mesh = load(&args.io.input, m)?;
    let topo = m.time("topology", || MeshTopology::build(&mesh));
    let out = m
        .time("smooth", || match args.method {
            Method::Laplacian => laplacian_smooth(&mesh, &topo, args.iters, args.lambda),
            Method::Taubin => taubin_smooth(&mesh, &topo, args.iters, args.lambda, args.mu),
        })
        .invalid("smoothing")?;
    save(&MeshData::new(out), &args.io.output, m)
}

fn bench(args: BenchArgs, m: &mut RunManifest) -> CliResult<()> {
    if args.iters.contains(&0) {
        return invalid("--iters values must be at least 1");
    }
    m.config = json!({ "iterations": args.iters, "threads": args.threads });
    let mut csv = String::from("mesh,vertices,iters,threads,seconds\n");
    for path in &args.input {
        let mesh = load(path, m)?;
        let topo = MeshTopology::build(&mesh);
        let coloring = greedy_domain_decomposition(&topo);
        let name = path
            .file_stem()
            .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
        for &threads in &args.threads {
            for &iters in &args.iters {
                let config = FilterConfig::new(iters).with_threads(threads);
                let start = Instant::now();
                gcf_filter(&mesh, &topo, &coloring, &config).invalid("filtering")?;
                let secs = start.elapsed().as_secs_f64();
                m.timings.push((
                    format!("filter {name} iters={iters} threads={threads}"),
                    secs,
                ));
                csv += &format!(
                    "{name},{},{iters},{threads},{secs:.6}\n",
                    mesh.vertex_count()
                );
            }
        }
    }
    match &args.output {
        Some(path) => {
            m.outputs.push(path.clone());
            write_text(path, &csv)
        }
        None => std::io::stdout()
            .write_all(csv.as_bytes())
            .input("writing to standard output"),
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let name = match &cli.command {
        Command::Filter(_) => "filter",
        Command::Metrics(_) => "metrics",
        Command::Noise(_) => "noise",
        Command::Gen(_) => "gen",
        Command::Color(_) => "color",
        Command::Curvature(_) => "curvature",
        Command::Smooth(_) => "smooth",
        Command::Bench(_) => "bench",
    };
    let mut m = RunManifest::new(name);
    match cli.command {
        Command::Filter(a) => filter(a, &mut m),
        Command::Metrics(a) => metrics(a, &mut m),
        Command::Noise(a) => noise(a, &mut m),
        Command::Gen(a) => gen(a, &mut m),
        Command::Color(a) => color(a, &mut m),
        Command::Curvature(a) => curvature(a, &mut m),
        Command::Smooth(a) => smooth(a, &mut m),
        Command::Bench(a) => bench(a, &mut m),
    }?;
    if let Some(path) = &cli.manifest {
        m.write(path)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
