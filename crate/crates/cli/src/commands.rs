use std::io::Write;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use extremal_core::curves::ReductionKind;
use extremal_core::fmt::format_sig;
use extremal_core::prime_scan::{predict_extremal, scan, st_histogram};
use extremal_core::st_approx::{bounds_check, majorant, minorant, BoundsCheck, Interval, Side};
use extremal_core::sympow::{
    bump_integral, conductor_exponent, lambda_sym_bad, smoothed_sum, SymPowLocalData,
};

use crate::args::{
    ApproxVerifyArgs, Format, FourierDumpArgs, PredictArgs, ScanArgs, SideArg, SmoothedSumArgs,
    StHistArgs, SympowDumpArgs,
};
use crate::config::{required, FileConfig};
use crate::input::read_curves;
use crate::output::{csv_field, json_line, open_output};

const DEFAULT_BINS: usize = 64;

pub fn scan_cmd(args: ScanArgs, cfg: &FileConfig) -> Result<()> {
    let path = required(args.curves, cfg.curves.clone(), "curves")?;
    let lo = required(args.lo, cfg.lo, "lo")?;
    let hi = required(args.hi, cfg.hi, "hi")?;
    let out = required(args.out, cfg.out.clone(), "out")?;
    let format = args.format.or(cfg.format).unwrap_or(Format::Csv);
    let records = args.records || cfg.records.unwrap_or(false);

    let curves = read_curves(&path)?;
    let multi = curves.len() > 1;
    let mut w = open_output(&out)?;
    for curve in &curves {
        let report = scan(curve, lo, hi, records || format == Format::Csv)?;
        match format {
            Format::Csv => {
                if multi {
                    writeln!(w, "# {}", curve.label())?;
                }
                report.write_csv(&mut w)?;
            }
            Format::Json => writeln!(w, "{}", json_line(&report)?)?,
        }
    }
    w.flush().with_context(|| format!("writing {}", out.display()))?;
    Ok(())
}

pub fn predict_cmd(args: PredictArgs, cfg: &FileConfig, w: &mut dyn Write) -> Result<()> {
    let x = required(args.x, cfg.x, "x")?;
    let cm = match (args.cm, args.no_cm) {
        (true, _) => true,
        (_, true) => false,
        _ => cfg.cm.unwrap_or(false),
    };
    writeln!(w, "{}", format_sig(predict_extremal(x, cm)?))?;
    Ok(())
}

pub fn st_hist_cmd(args: StHistArgs, cfg: &FileConfig, w: &mut dyn Write) -> Result<()> {
    let path = required(args.curves, cfg.curves.clone(), "curves")?;
    let lo = required(args.lo, cfg.lo, "lo")?;
    let hi = required(args.hi, cfg.hi, "hi")?;
    let bins = args.bins.or(cfg.bins).unwrap_or(DEFAULT_BINS);
    if bins == 0 {
        bail!("--bins must be at least 1");
    }
    let curves = read_curves(&path)?;
    writeln!(w, "curve,bin,theta_lo,theta_hi,empirical,mu_st")?;
    for curve in curves {
        let report = scan(&curve, lo, hi, true)?;
        let label = csv_field(curve.label());
        for b in st_histogram(report.records.as_deref().unwrap_or_default(), bins) {
            writeln!(
                w,
                "{label},{},{},{},{},{}",
                b.bin,
                format_sig(b.theta_lo),
                format_sig(b.theta_hi),
                format_sig(b.empirical),
                format_sig(b.mu_st)
            )?;
        }
    }
    Ok(())
}

fn degree(m: Option<usize>, cfg: &FileConfig) -> Result<usize> {
    let m = required(m, cfg.m, "M")?;
    if m == 0 {
        bail!("--M must be at least 1");
    }
    Ok(m)
}

#[derive(Serialize)]
struct VerifyReport {
    #[serde(rename = "M")]
    m: usize,
    interval: Interval,
    majorant: BoundsCheck,
    minorant: BoundsCheck,
    all_pass: bool,
}

pub fn approx_verify_cmd(args: ApproxVerifyArgs, cfg: &FileConfig, w: &mut dyn Write) -> Result<()> {
    let m = degree(args.m, cfg)?;
    let alpha = args.alpha.or(cfg.alpha).unwrap_or(0.0);
    let beta = args.beta.or(cfg.beta).unwrap_or(1.0 / m as f64);
    let interval = Interval::new(alpha, beta)?;
    let maj = bounds_check(&majorant(interval, m)?)?;
    let min = bounds_check(&minorant(interval, m)?)?;
    let report = VerifyReport {
        m,
        interval,
        all_pass: maj.all_pass && min.all_pass,
        majorant: maj,
        minorant: min,
    };
    writeln!(w, "{}", json_line(&report)?)?;
    Ok(())
}

#[derive(Serialize)]
struct FourierDump<'a> {
    #[serde(rename = "M")]
    m: usize,
    interval: Interval,
    side: Side,
    coeffs: &'a [f64],
    bounds_check: BoundsCheck,
}

pub fn fourier_dump_cmd(args: FourierDumpArgs, cfg: &FileConfig, w: &mut dyn Write) -> Result<()> {
    let m = degree(args.m, cfg)?;
    let alpha = required(args.alpha, cfg.alpha, "alpha")?;
    let beta = required(args.beta, cfg.beta, "beta")?;
    let interval = Interval::new(alpha, beta)?;
    let poly = match args.side.or(cfg.side).unwrap_or(SideArg::Maj) {
        SideArg::Maj => majorant(interval, m)?,
        SideArg::Min => minorant(interval, m)?,
    };
    let dump = FourierDump {
        m,
        interval,
        side: poly.side(),
        coeffs: poly.coeffs(),
        bounds_check: bounds_check(&poly)?,
    };
    writeln!(w, "{}", json_line(&dump)?)?;
    Ok(())
}

#[derive(Serialize)]
struct LocalDump<'a> {
    curve: &'a str,
    p: u64,
    kind: ReductionKind,
    n: u32,
    eps_n: u32,
    delta_n: u32,
    exact: bool,
    /// `null` when the local data does not determine the coefficient.
    lambda_m1: Option<f64>,
}

pub fn sympow_dump_cmd(args: SympowDumpArgs, cfg: &FileConfig, w: &mut dyn Write) -> Result<()> {
    let path = required(args.curves, cfg.curves.clone(), "curves")?;
    let n = required(args.n, cfg.n, "n")?;
    for curve in read_curves(&path)? {
        for spec in curve.bad_primes() {
            let e = conductor_exponent(spec, n);
            let lambda_m1 = SymPowLocalData::from_spec(spec, n)
                .and_then(|data| lambda_sym_bad(&data, 1))
                .ok();
            let row = LocalDump {
                curve: curve.label(),
                p: spec.p,
                kind: spec.kind,
                n,
                eps_n: e.eps_n,
                delta_n: e.delta_n,
                exact: e.exact,
                lambda_m1,
            };
            writeln!(w, "{}", json_line(&row)?)?;
        }
    }
    Ok(())
}

pub fn smoothed_sum_cmd(args: SmoothedSumArgs, cfg: &FileConfig, w: &mut dyn Write) -> Result<()> {
    let path = required(args.curves, cfg.curves.clone(), "curves")?;
    let n = required(args.n, cfg.n.map(|n| n as usize), "n")?;
    let x = required(args.x, cfg.x, "x")?;
    let curves = read_curves(&path)?;
    writeln!(w, "curve,n,x,sum,normalized")?;
    for curve in curves {
        let s = smoothed_sum(&curve, n, x)?;
        writeln!(
            w,
            "{},{n},{},{},{}",
            csv_field(curve.label()),
            format_sig(x),
            format_sig(s),
            format_sig(s / (x * bump_integral()))
        )?;
    }
    Ok(())
}
