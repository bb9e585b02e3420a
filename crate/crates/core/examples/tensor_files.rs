//! Writing and reading count and encoding tensors with their sidecars.

use spse::generate::cycle;
use spse::tensor_file::{read_tensor, sidecar_path, write_sidecar, write_tensor, Sidecar, TensorData};
use spse::{count_paths, encode_spse, Preset};

fn main() -> spse::Result<()> {
    let dir = std::env::temp_dir().join("spse-tensor-example");
    std::fs::create_dir_all(&dir)?;
    let g = cycle(6)?;
    let (cfg, enc) = Preset::Zinc.config(0);
    let report = count_paths(&g, &cfg)?;

    let counts_path = dir.join("c6.spse");
    write_tensor(&counts_path, &TensorData::Counts(report.tensor.counts().clone()))?;
    write_sidecar(
        &counts_path,
        &Sidecar {
            config: serde_json::to_value(&cfg)?,
            seed: cfg.seed,
            saturated: report.saturated,
            wall_time_ms: report.wall_time.as_secs_f64() * 1e3,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            dag_count: Some(report.dag_count),
        },
    )?;

    let back = read_tensor(&counts_path)?.into_counts()?;
    assert_eq!(back, report.tensor);
    let encoded = encode_spse(&back, &enc);
    let enc_path = dir.join("c6.enc");
    write_tensor(&enc_path, &TensorData::Reals(encoded.clone()))?;
    assert_eq!(read_tensor(&enc_path)?.into_reals()?, encoded);

    println!("{} ({} bytes)", counts_path.display(), std::fs::metadata(&counts_path)?.len());
    println!("{}", std::fs::read_to_string(sidecar_path(&counts_path))?);
    println!("(0,1) counts  {:?}", &back.series(0, 1)[..6]);
    println!("(0,1) encoded {:.4?}", &encoded.series(0, 1)[..6]);
    Ok(())
}
