//! Dataset presets and the logarithmic count encoding.

use spse::Preset;

fn main() {
    println!("{:<9} {:>5} {:>3} {:>5} {:>3} {:>6} {:>5} {:>2}   f(0)     f(10)    f(1e6)", "preset", "R", "K", "D_dfs", "N", "alpha", "beta", "n");
    for p in Preset::ALL {
        let v = p.values();
        let (_, enc) = p.config(0);
        println!(
            "{:<9} {:>5} {:>3} {:>5} {:>3} {:>6} {:>5} {:>2}  {:>7.4}  {:>7.4}  {:>7.4}",
            p.name(),
            v.root_fraction,
            v.k_max,
            v.dfs_depth,
            v.trials,
            v.alpha,
            v.beta,
            v.log_depth,
            enc.apply(0.0),
            enc.apply(10.0),
            enc.apply(1e6)
        );
    }
}
