"""The three emulation roles on localhost, in one process.

tx -> channel node -> rx over real UDP sockets, optionally with forced
datagram loss. Each received frame is compared with the in-process
simulation of the same frame (same seed), which it should match exactly when
nothing is dropped.

The same thing as three shells:

    python -m semntn emulate rx --bind 127.0.0.1:9102 --config demos/netem.ini --csv rx.csv
    python -m semntn emulate channel --bind 127.0.0.1:9101 --peer 127.0.0.1:9102 --channel geo --config demos/netem.ini
    python -m semntn emulate tx --peer 127.0.0.1:9101 --config demos/netem.ini
"""

import argparse
import threading
import time

from semntn.corpus import test_frames
from semntn.datamodel import ChannelSpec, Rng
from semntn.netem import NetemConfig, run_channel_node, run_rx, run_tx, simulate_frame

ap = argparse.ArgumentParser()
ap.add_argument("--pipeline", default="semantic", choices=("semantic", "classical"))
ap.add_argument("--channel", default="ideal")
ap.add_argument("--drop", type=float, default=0.0)
ap.add_argument("--frames", type=int, default=4)
ap.add_argument("--seed", type=int, default=0)
args = ap.parse_args()

cfg = NetemConfig(pipeline=args.pipeline, frames=args.frames, drop_rate=args.drop, qp=12 if args.drop else 34, silence_s=1.0, seed=args.seed)
ch = ChannelSpec.parse(args.channel)
node_ep, rx_ep = "127.0.0.1:9101", "127.0.0.1:9102"

out = {}
node = threading.Thread(target=lambda: out.setdefault("log", run_channel_node(node_ep, rx_ep, ch, Rng(args.seed), cfg, max_frames=args.frames, idle_s=30)))
rx = threading.Thread(target=lambda: out.setdefault("rx", run_rx(rx_ep, cfg, idle_s=30)))
node.start()
rx.start()
time.sleep(0.3)
print(f"tx sent {run_tx(node_ep, cfg)} datagrams")
node.join()
rx.join()

frames = test_frames()
for rec in sorted(out["rx"], key=lambda r: r.frame_id):
    ref = simulate_frame(cfg, rec.frame_id, frames[rec.frame_id], ch, Rng(args.seed))
    print(f"frame {rec.frame_id}: over UDP {rec.ms_ssim:.4f}, in-process {ref.ms_ssim:.4f}, snr {rec.snr_db:.2f} dB")
for e in out["log"]:
    if e["dropped"]:
        print(f"channel node dropped segments {e['dropped']} of frame {e['frame_id']}")
