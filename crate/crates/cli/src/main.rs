mod args;
mod commands;
mod config;
mod input;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command};
use config::FileConfig;

fn run(cli: Cli) -> Result<()> {
    let cfg = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let threads = cli.threads.or(cfg.threads);
    in_pool(threads, || {
        let stdout = io::stdout();
        let mut w = stdout.lock();
        match cli.command {
            Command::Scan(a) => commands::scan_cmd(a, &cfg),
            Command::Predict(a) => commands::predict_cmd(a, &cfg, &mut w),
            Command::StHist(a) => commands::st_hist_cmd(a, &cfg, &mut w),
            Command::ApproxVerify(a) => commands::approx_verify_cmd(a, &cfg, &mut w),
            Command::FourierDump(a) => commands::fourier_dump_cmd(a, &cfg, &mut w),
            Command::SympowDump(a) => commands::sympow_dump_cmd(a, &cfg, &mut w),
            Command::SmoothedSum(a) => commands::smoothed_sum_cmd(a, &cfg, &mut w),
        }?;
        w.flush()?;
        Ok(())
    })
}

#[cfg(feature = "parallel")]
fn in_pool<T: Send>(threads: Option<u32>, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n as usize);
    }
    builder.build()?.install(f)
}

#[cfg(not(feature = "parallel"))]
fn in_pool<T>(_threads: Option<u32>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    f()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
