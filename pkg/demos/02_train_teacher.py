"""Train a small class-conditional teacher and draw guided DDIM samples.

A few hundred steps at width 32 already produce recognisable shapes; the
acceptance teacher uses the same code at width 64 for 20k steps.
"""
import os
import sys
from pathlib import Path

from lcdlab.config import desk_config
from lcdlab.io import image_grid, write_pgm
from lcdlab.runner import load_for_sampling, read_csv, run_training, schedule_from
from lcdlab.solver import SamplerConfig, sample

steps = int(sys.argv[1]) if len(sys.argv) > 1 else 600
out = Path(os.environ.get("LCDLAB_OUT", "runs")) / "demo" / "teacher"

cfg = desk_config(model={"width": 32, "depth": 4, "heads": 4}, data={"n_samples": 1024},
                  train={"kind": "teacher", "steps": steps, "batch": 32, "lr": 1e-3,
                         "checkpoint_every": steps // 2, "sample_every": steps, "eval_every": steps // 3,
                         "eval_n": 64})
result = run_training("teacher", cfg, out_dir=out)
losses = [float(r["loss"]) for r in read_csv(out / "metrics.csv")]
print(f"loss: first 20 steps {sum(losses[:20]) / 20:.3f}, last 20 steps {sum(losses[-20:]) / 20:.3f}")
print("mmd2 by step:", [(r["step"], round(float(r["value"]), 4)) for r in read_csv(out / "eval.csv")])

# guided DDIM: every row is one class, columns differ only by noise
_, model, cfg = load_for_sampling(out / "checkpoints" / "final.pxdl")
labels = [c for c in range(4) for _ in range(8)]
for w in (0.0, 4.5):
    x = sample(model, schedule_from(cfg), SamplerConfig(25, w, "ddim", seed=1), labels, (1, 16, 16))
    write_pgm(out / f"ddim25_w{w}.pgm", image_grid(x, ncols=8))
print("samples in", out)
