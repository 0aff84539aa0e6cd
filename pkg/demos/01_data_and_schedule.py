"""Look at the toy dataset and the noise schedule before training anything.

Writes a grid of training images, their Sobel edge maps and the schedule
curves to ``$LCDLAB_OUT/demo`` (default ``runs/demo``).
"""
import os
from pathlib import Path

import numpy as np

from lcdlab.data import SHAPE_FAMILIES, ToyDatasetSpec, gen_dataset, sobel_edges
from lcdlab.io import image_grid, write_pgm
from lcdlab.schedule import add_noise, default_schedule, dump_curves

out = Path(os.environ.get("LCDLAB_OUT", "runs")) / "demo"
out.mkdir(parents=True, exist_ok=True)

ds = gen_dataset(ToyDatasetSpec(n_samples=64, image_size=16, num_classes=4, seed=0))
print("classes:", SHAPE_FAMILIES[:4], "counts:", np.bincount(ds.labels).tolist())
write_pgm(out / "data.pgm", image_grid(ds.images[:32], ncols=8))

# edge maps are in [0, 1]; shift them to the [-1, 1] image range for display
edges = sobel_edges(ds.images[:32])
write_pgm(out / "edges.pgm", image_grid(2 * edges - 1, ncols=8))

sched = default_schedule(1000)
for t in (1, 250, 500, 750, 1000):
    print(f"t={t:4d}  alpha_bar={sched.alpha_bar[t]:.5f}  log_snr={sched.log_snr(t):+.2f}")
dump_curves(sched, out / "schedule.csv")

# one image pushed through the forward process
eps = np.random.default_rng(0).normal(size=(5,) + ds.images.shape[1:]).astype(np.float32)
ts = np.array([1, 100, 300, 600, 1000])
noisy = add_noise(sched, np.repeat(ds.images[:1], 5, axis=0), eps, ts)
write_pgm(out / "forward.pgm", image_grid(noisy, ncols=5))
print("wrote", sorted(p.name for p in out.iterdir()))
