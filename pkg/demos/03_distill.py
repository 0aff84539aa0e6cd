"""Distill the demo teacher into a 4-step consistency student and compare.

Run ``02_train_teacher.py`` first. The student learns to jump straight to the
guided teacher's endpoint, so 4 network calls replace 25 guided DDIM steps
(50 forward passes' worth of work).
"""
import os
import sys
from pathlib import Path

from lcdlab.config import desk_config
from lcdlab.io import image_grid, write_pgm
from lcdlab.metrics import benchmark_sampler, mmd2
from lcdlab.model import ConsistencyHead
from lcdlab.runner import heldout_from, load_for_sampling, read_csv, run_training, schedule_from
from lcdlab.solver import SamplerConfig, sample

steps = int(sys.argv[1]) if len(sys.argv) > 1 else 400
root = Path(os.environ.get("LCDLAB_OUT", "runs")) / "demo"
teacher_ckpt = root / "teacher" / "checkpoints" / "final.pxdl"
out = root / "lcd"

cfg = desk_config(model={"width": 32, "depth": 4, "heads": 4}, data={"n_samples": 1024},
                  train={"kind": "lcd", "steps": steps, "batch": 24, "lr": 1e-4,
                         "checkpoint_every": steps // 2, "sample_every": steps},
                  io={"teacher": str(teacher_ckpt)})
run_training("lcd", cfg, out_dir=out)
losses = [float(r["loss"]) for r in read_csv(out / "metrics.csv")]
print(f"distillation loss: first 50 {sum(losses[:50]) / 50:.4f}, last 50 {sum(losses[-50:]) / 50:.4f}")

_, teacher, cfg = load_for_sampling(teacher_ckpt)
_, student, _ = load_for_sampling(out / "checkpoints" / "final.pxdl")
sched, head = schedule_from(cfg), ConsistencyHead(T=1000)
held = heldout_from(cfg, 256)
shape = (1, 16, 16)

fast = sample(student, sched, SamplerConfig(4, 4.5, "consistency", seed=0), held.labels, shape, head=head)
slow = sample(teacher, sched, SamplerConfig(25, 4.5, "ddim", seed=0), held.labels, shape)
print(f"MMD2 to held-out data: student 4 steps {mmd2(fast, held.images):.4f}, "
      f"teacher 25 steps {mmd2(slow, held.images):.4f}")
write_pgm(out / "student_4step.pgm", image_grid(fast[:32], ncols=8))
write_pgm(out / "teacher_25step.pgm", image_grid(slow[:32], ncols=8))

t_fast = benchmark_sampler(student, SamplerConfig(4, 4.5, "consistency"), sched, head=head)
t_slow = benchmark_sampler(teacher, SamplerConfig(25, 4.5, "ddim"), sched)
print(f"per image: {t_fast.mean_ms:.1f} ms vs {t_slow.mean_ms:.1f} ms, ratio {t_fast.mean_ms / t_slow.mean_ms:.2f}")
