"""Discretize the stock waveforms and write their sequency and frequency spectra.

Run: python3 demos/waveform_spectra.py [--outdir DIR] [--n QUBITS]
"""

import argparse
import os

import numpy as np

from walshdsp import dft_spectrum, discretize, save_csv, wht_sequency
from walshdsp.signals import Waveform


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", default="demo_out")
    parser.add_argument("--n", type=int, default=6, help="log2 of the sample count")
    args = parser.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    catalogue = {
        "sine": Waveform("sine", cycles=1.0),
        "triangle": Waveform("triangular", cycles=1.0),
        "pulse": Waveform("rectangular_pulse", offset=0.25, width=0.375),
        "square": Waveform("square", cycles=2.0),
    }
    size = 1 << args.n
    for name, waveform in catalogue.items():
        signal = discretize(waveform, args.n)
        seq = np.abs(wht_sequency(signal).values)
        frq = np.abs(dft_spectrum(signal))
        save_csv(os.path.join(args.outdir, f"{name}.csv"), signal.values, with_index=True)
        save_csv(os.path.join(args.outdir, f"{name}.sequency.csv"), seq, with_index=True)
        save_csv(os.path.join(args.outdir, f"{name}.frequency.csv"), frq, with_index=True)
        top = [g for g in np.argsort(seq)[::-1][:3] if seq[g] > 1e-9]
        peaks = ", ".join(f"g={g} ({seq[g]:.3f})" for g in top)
        print(f"{name:8s} N={size}: dominant sequencies {peaks}")

    # a square wave with 2^m cycles is a single Walsh basis vector
    for m in (0, 1, 2):
        signal = discretize(Waveform("square", cycles=float(1 << m)), args.n)
        seq = wht_sequency(signal).values
        spike = int(np.argmax(np.abs(seq)))
        print(f"square with {1 << m} cycle(s): single spike at sequency {spike} "
              f"(expected {(1 << (m + 1)) - 1}), value {seq[spike]:.4f} = sqrt(N)")
    print(f"CSV files written under {args.outdir}/")


if __name__ == "__main__":
    main()
