#!/usr/bin/env python3
# Deterministic generator for the bundled synthetic test corpus.
#
# The three 512x512 greyscale images under data/corpus/ were produced by this
# script and committed; the C++ tests read the committed files and never
# regenerate them. Rerunning the script reproduces the same bytes (fixed
# numpy Generator seeds, no platform-dependent ops).
#
# Requires numpy and scipy (generation only, not a library dependency).

import os
import numpy as np
from scipy.ndimage import gaussian_filter


def spectral_field(rng, alpha, size=512):
    """Zero-mean unit-variance field with a 1/f^alpha amplitude spectrum."""
    white = rng.standard_normal((size, size))
    F = np.fft.fft2(white)
    fx = np.fft.fftfreq(size)[:, None]
    fy = np.fft.fftfreq(size)[None, :]
    rad = np.sqrt(fx * fx + fy * fy)
    rad[0, 0] = 1.0
    F *= rad ** (-alpha)
    F[0, 0] = 0.0
    f = np.real(np.fft.ifft2(F))
    return (f - f.mean()) / f.std()


def round_half_away(x):
    return np.where(x >= 0, np.floor(x + 0.5), np.ceil(x - 0.5))


def to_u8(f):
    return np.clip(round_half_away(f), 0, 255).astype(np.uint8)


def img_ridge():
    """Terrain-like fractal relief with fine texture and a directional wave."""
    rng = np.random.default_rng(101)
    base = spectral_field(rng, 1.7)
    fine = spectral_field(rng, 0.9)
    noise = rng.standard_normal((512, 512))
    xx, yy = np.meshgrid(np.arange(512), np.arange(512))
    u = xx * np.cos(0.8) + yy * np.sin(0.8)
    env = 0.5 + 0.5 * spectral_field(rng, 1.5)
    f = (118 + 42 * base + 14 * fine + 1.8 * noise
         + 13 * np.clip(env, 0, 2) * np.sin(2 * np.pi * u / 7.3))
    return to_u8(f)


def img_blocks():
    """Man-made scene surrogate: rectangles and discs over a gradient."""
    rng = np.random.default_rng(202)
    xx, yy = np.meshgrid(np.arange(512), np.arange(512))
    img = 120 + 0.08 * xx - 0.05 * yy
    for _ in range(60):
        x0, y0 = rng.integers(0, 480, 2)
        w, h = rng.integers(16, 120, 2)
        val = rng.uniform(-70, 70)
        shape = rng.integers(0, 2)
        if shape == 0:
            img[y0:min(512, y0 + h), x0:min(512, x0 + w)] += val
        else:
            cx, cy = x0 + w / 2, y0 + h / 2
            rad = min(w, h) / 2
            d = np.sqrt((xx - cx) ** 2 + (yy - cy) ** 2)
            img += val * (d <= rad)
    img = gaussian_filter(img, 1.0)
    tex = spectral_field(rng, 0.9)
    noise = rng.standard_normal((512, 512))
    img = img + 9 * tex + 2.2 * noise
    return to_u8(img)


def img_weave():
    """Fabric-like oriented textures over smooth large-scale shading."""
    rng = np.random.default_rng(303)
    xx, yy = np.meshgrid(np.arange(512), np.arange(512))
    img = 130 + 45 * spectral_field(rng, 2.0)
    ang1, ang2 = 0.35, 1.25
    u1 = xx * np.cos(ang1) + yy * np.sin(ang1)
    u2 = xx * np.cos(ang2) + yy * np.sin(ang2)
    env1 = 0.5 + 0.5 * spectral_field(rng, 1.5)
    env2 = 0.5 + 0.5 * spectral_field(rng, 1.5)
    img += 17 * np.clip(env1, 0, 2) * np.sin(2 * np.pi * u1 / 9.5)
    img += 14 * np.clip(env2, 0, 2) * np.sin(2 * np.pi * u2 / 5.3)
    img += 2.2 * rng.standard_normal((512, 512))
    return to_u8(img)


def save_pgm(path, img):
    h, w = img.shape
    with open(path, 'wb') as f:
        f.write(b'P5\n%d %d\n255\n' % (w, h))
        f.write(img.tobytes())


def main():
    out_dir = os.path.join(os.path.dirname(__file__), '..', 'data', 'corpus')
    os.makedirs(out_dir, exist_ok=True)
    for name, fn in [('ridge', img_ridge), ('blocks', img_blocks),
                     ('weave', img_weave)]:
        img = fn()
        save_pgm(os.path.join(out_dir, name + '.pgm'), img)
        print(name, 'mean %.1f std %.1f' % (img.mean(), img.std()))


if __name__ == '__main__':
    main()
