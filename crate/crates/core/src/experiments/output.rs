use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};

use super::{ExperimentConfig, ExperimentError, ScalingFit};

fn write_header<W: Write>(w: &mut W, header: &[String]) -> std::io::Result<()> {
    for line in header {
        writeln!(w, "# {line}")?;
    }
    Ok(())
}

/// `size,metric,value` rows after `#` comment lines.
pub fn write_results_csv<W: Write>(
    mut w: W,
    header: &[String],
    metric: &str,
    fit: &ScalingFit,
) -> Result<(), ExperimentError> {
    write_header(&mut w, header)?;
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["size", "metric", "value"])?;
    for &(size, value) in &fit.points {
        out.write_record([size.to_string(), metric.to_string(), value.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

/// Two whitespace-separated columns, readable by gnuplot and friends.
pub fn write_plot_data<W: Write>(mut w: W, header: &[String], fit: &ScalingFit) -> std::io::Result<()> {
    write_header(&mut w, header)?;
    writeln!(w, "# size value")?;
    for &(size, value) in &fit.points {
        writeln!(w, "{size} {value}")?;
    }
    Ok(())
}

pub fn fit_json(header: &[String], metric: &str, fit: &ScalingFit) -> Value {
    json!({
        "provenance": header,
        "metric": metric,
        "slope": fit.slope,
        "intercept": fit.intercept,
        "r_squared": fit.r_squared,
        "points": fit.points,
    })
}

/// Writes `results.csv`, `fit.json` and `plot.dat` into `dir`, creating it
/// if needed.
pub fn write_experiment_outputs(
    dir: &Path,
    header: &[String],
    cfg: &ExperimentConfig,
    fit: &ScalingFit,
) -> Result<(), ExperimentError> {
    fs::create_dir_all(dir)?;
    let metric = cfg.metric.name();
    write_results_csv(fs::File::create(dir.join("results.csv"))?, header, metric, fit)?;
    let mut text = serde_json::to_string_pretty(&fit_json(header, metric, fit))?;
    text.push('\n');
    fs::write(dir.join("fit.json"), text)?;
    write_plot_data(fs::File::create(dir.join("plot.dat"))?, header, fit)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_plot_layout() {
        let fit = ScalingFit::new(vec![(1.0, 2.0), (2.0, 8.0), (4.0, 32.0)]).unwrap();
        let header = vec!["congestion test".to_string()];
        let mut buf = Vec::new();
        write_results_csv(&mut buf, &header, "mu", &fit).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "# congestion test\nsize,metric,value\n1,mu,2\n2,mu,8\n4,mu,32\n");
        let mut buf = Vec::new();
        write_plot_data(&mut buf, &[], &fit).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "# size value\n1 2\n2 8\n4 32\n");
        let v = fit_json(&header, "mu", &fit);
        assert_eq!(v["slope"], 2.0);
        assert_eq!(v["provenance"][0], "congestion test");
    }
}
