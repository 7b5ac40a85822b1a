"""Classical and learned transmission of the same frames across SNR.

Sweeps both pipelines over AWGN at a fixed operating point and writes
``sweep.csv`` plus an SVG. With the default grid, which starts below the LDPC
threshold, the classical curve shows its cliff and the semantic curve bends
smoothly.

    python demos/02_cliff_vs_graceful.py --out runs/snr
    python demos/02_cliff_vs_graceful.py --config demos/sweep_snr.ini

Needs the reference models under models/ (``python -m semntn train --reference``).
"""

import argparse
from pathlib import Path

from semntn.harness import ExperimentConfig, emit_plot, load_config, run_sweep

ap = argparse.ArgumentParser()
ap.add_argument("--config")
ap.add_argument("--out", default="runs/snr")
ap.add_argument("--trials", type=int, default=2)
args = ap.parse_args()

if args.config:
    cfg = load_config(args.config, out=args.out)
else:
    cfg = ExperimentConfig(grid=tuple(float(s) for s in range(-4, 11)), trials=args.trials, frames=12, cbr=0.0625, qp=34, out=args.out)

rows = run_sweep(cfg)
by_pipe = {}
for r in rows:
    by_pipe.setdefault(r.pipeline, []).append(r)

print(f"{'SNR':>5}" + "".join(f"{p:>22}" for p in by_pipe))
for i, point in enumerate(cfg.grid):
    cells = []
    for p, rs in by_pipe.items():
        r = rs[i]
        cells.append(f"{r.ms_ssim:8.4f} ({r.ms_ssim_db:5.2f} dB)")
    print(f"{point:5.1f}" + "".join(f"{c:>22}" for c in cells))

svg = emit_plot(Path(cfg.out) / "sweep.csv", "msssim_vs_snr")
print(f"\nplot: {svg}")
