#!/usr/bin/env python3
"""Regenerates data/ref_sbs_catalog.csv and src/ref_catalog_data.cpp.

The bundled catalog is a synthetic stand-in for a curated signature
database: eight column-stochastic profiles over the 96 trinucleotide
substitution channels, spanning the entropy range seen in real catalogs
(two-peak sparse profiles through nearly flat ones).  REF-C and REF-D are
deliberately correlated (cosine ~ 0.87).  All values are frozen by the
seeds below; rerun only if the profiles themselves need to change.
"""

import numpy as np

I = 96
BASES = "ACGT"


def channel_labels():
    out = []
    for sub in ["C>A", "C>G", "C>T", "T>A", "T>C", "T>G"]:
        for b5 in BASES:
            for b3 in BASES:
                out.append(f"{b5}[{sub}]{b3}")
    return out


def sparse(peaks, dust_scale, seed):
    r = np.random.default_rng(seed)
    s = r.gamma(0.35, 1.0, I) * dust_scale
    for idx, w in peaks:
        s[idx] += w
    return s / s.sum()


def flat(sigma, seed, base=None):
    r = np.random.default_rng(seed)
    s = np.exp(r.normal(0.0, sigma, I))
    if base is not None:
        s = base * s
    return s / s.sum()


def main():
    shared = np.exp(np.random.default_rng(99).normal(0.0, 0.45, I))
    cols = {
        # sparse, clock-like
        "REF-A": sparse([(42, 0.30), (46, 0.25), (34, 0.14), (38, 0.12)], 0.0035, 11),
        # very sparse two-peak; elicited concentration ~ 17 at 0.975 target
        "REF-B": sparse([(37, 0.48), (33, 0.32)], 0.0022, 12),
        # near-flat profile
        "REF-C": flat(0.38, 13, base=shared),
        # sparse two-peak on different channels
        "REF-E": sparse([(21, 0.45), (17, 0.28)], 0.003, 15),
        # second flat profile sharing REF-C's base, so the pair is correlated;
        # kept out of the leading block that simulations use by default
        "REF-D": flat(0.38, 14, base=shared),
        "REF-F": flat(1.1, 16),
        "REF-G": sparse([(60, 0.35), (70, 0.20), (5, 0.15)], 0.004, 17),
        "REF-H": flat(0.9, 18),
    }
    labels = channel_labels()
    names = list(cols)

    lines = ["channel," + ",".join(names)]
    for i, lab in enumerate(labels):
        row = ",".join(f"{cols[n][i]:.17g}" for n in names)
        lines.append(f"{lab},{row}")
    with open("data/ref_sbs_catalog.csv", "w") as f:
        f.write("\n".join(lines) + "\n")

    with open("src/ref_catalog_data.cpp", "w") as f:
        f.write("// Generated by tests/tools/make_catalog_fixture.py. Do not edit by hand.\n")
        f.write('#include "cnmf/simulate.hpp"\n\nnamespace cnmf::detail {\n\n')
        f.write("const char* const kRefCatalogNames[%d] = {%s};\n\n"
                % (len(names), ", ".join('"%s"' % n for n in names)))
        f.write("const char* const kRefChannelLabels[%d] = {\n" % I)
        for i in range(0, I, 6):
            f.write("    " + ", ".join('"%s"' % l for l in labels[i:i + 6]) + ",\n")
        f.write("};\n\n")
        f.write("const double kRefCatalog[%d][%d] = {\n" % (I, len(names)))
        for i in range(I):
            f.write("    {" + ", ".join(f"{cols[n][i]:.17g}" for n in names) + "},\n")
        f.write("};\n\n}  // namespace cnmf::detail\n")

    for n in names:
        s = cols[n]
        print(n, "l2^2=%.4f" % (s ** 2).sum(), "max=%.3f" % s.max())
    cd = cols["REF-C"] @ cols["REF-D"] / np.linalg.norm(cols["REF-C"]) / np.linalg.norm(cols["REF-D"])
    print("cos(REF-C, REF-D) =", round(cd, 4))


if __name__ == "__main__":
    main()
