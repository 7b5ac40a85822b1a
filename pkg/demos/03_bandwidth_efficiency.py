"""How much channel bandwidth does each pipeline need for MS-SSIM 0.9?

Runs a CBR sweep over the GEO link (SNR drawn per frame from 9.3..10 dB) and
reports the ratio of the CBRs at which each pipeline first reaches the
quality floor. Below one LDPC codeword (CBR ~0.03 at 128x128) the classical
chain sends nothing at all, which is where the learned codec is most useful.

    python demos/03_bandwidth_efficiency.py --out runs/cbr
"""

import argparse
from pathlib import Path

from semntn.datamodel import ChannelSpec
from semntn.harness import ExperimentConfig, emit_plot, report_efficiency_gain, run_sweep

ap = argparse.ArgumentParser()
ap.add_argument("--out", default="runs/cbr")
ap.add_argument("--trials", type=int, default=2)
ap.add_argument("--floor", type=float, default=0.90)
args = ap.parse_args()

grid = (0.001, 0.002, 0.004, 0.008, 0.016, 0.03, 0.0625, 0.125, 0.25, 0.5)
cfg = ExperimentConfig(axis="cbr", grid=grid, trials=args.trials, channel=ChannelSpec.parse("geo"), out=args.out)
rows = run_sweep(cfg)

for r in rows:
    print(f"{r.pipeline:9s} cbr {r.point:<7g} actual {r.cbr:.4f}  ms-ssim {r.ms_ssim:.4f}")

csv_path = Path(args.out) / "sweep.csv"
emit_plot(csv_path, "msssim_vs_cbr")
try:
    print(f"\nefficiency gain at MS-SSIM {args.floor}: {report_efficiency_gain(csv_path, args.floor):.2f}x")
except Exception as e:
    print(f"\nno gain figure: {e}")
