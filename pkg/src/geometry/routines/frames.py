import functools

import numpy as np

def complement_basis(u: np.ndarray) -> np.ndarray:
  return _complement_basis(tuple(float(c) for c in u)).copy()

@functools.lru_cache(maxsize=256)
def _complement_basis(u: tuple[float, ...]) -> np.ndarray:
  # Gram-Schmidt on the standard basis, skipping the coordinate most aligned with u.
  u = np.asarray(u, dtype=float)
  u = u / np.linalg.norm(u)
  skipped = int(np.argmax(np.abs(u)))

  rows = [u]
  for j in range(len(u)):
    if j == skipped: continue
    e = np.zeros(len(u))
    e[j] = 1.0
    for row in rows:
      e = e - np.dot(e, row) * row
    rows.append(e / np.linalg.norm(e))

  return np.array(rows[1:]).reshape(len(u) - 1, len(u))

def affine_frame(points: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
  origin = points.mean(axis=0)
  centered = points - origin
  dim = points.shape[1]

  if not np.any(np.abs(centered) > tol):
    return origin, np.zeros((0, dim))

  _, singular, vt = np.linalg.svd(centered, full_matrices=False)
  rank = int(np.sum(singular > tol * max(1.0, singular[0])))

  if rank == dim:
    return origin, np.eye(dim)

  basis = vt[:rank]
  # Fix the SVD sign ambiguity so frames are reproducible.
  pivots = np.argmax(np.abs(basis), axis=1)
  signs = np.sign(basis[np.arange(rank), pivots])
  return origin, basis * signs[:, None]
