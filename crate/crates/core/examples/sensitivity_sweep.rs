//! Discovery ratio against a thorough configuration while varying one of
//! R, N and D_dfs.

use spse::counter::CountConfig;
use spse::generate::molecule_like;
use spse::sweep::{sweep, to_csv, SweepParam};

fn main() -> spse::Result<()> {
    let graphs: Vec<_> = (0..30).map(|s| molecule_like(23, 3, s)).collect::<spse::Result<_>>()?;
    let canonical = CountConfig {
        root_fraction: 1.0,
        k_max: 20,
        dfs_depth: 8,
        trials: 8,
        ..CountConfig::default()
    };
    let base = CountConfig {
        root_fraction: 0.5,
        dfs_depth: 2,
        trials: 2,
        ..canonical.clone()
    };
    for (param, values) in [
        (SweepParam::R, vec![0.1, 0.25, 0.5, 1.0]),
        (SweepParam::N, vec![1.0, 2.0, 4.0, 8.0]),
        (SweepParam::Ddfs, vec![0.0, 1.0, 2.0, 4.0, 8.0]),
    ] {
        print!("{}", to_csv(param, &sweep(&graphs, &base, &canonical, param, &values)?));
    }
    Ok(())
}
