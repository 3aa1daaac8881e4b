"""Ancilla-parity circuits: ideal distributions, sampling, and readout noise.

The pair-check circuit entangles an ancilla with the box parity of pigeons 0
and 1, then reads all pigeons in the |+i>/|-i> basis.  Ideally only eight of
the thirty-two outcomes appear, each at probability 1/8, and whenever the
pigeons land on the post-selected (+i,+i,+i) pattern the ancilla always says
"different boxes".  The all-same-check variant targets the three-way projector
instead and is completely flat.  Shot sampling is seeded and reproducible, and
a readout-flip noise model shows how forbidden outcomes leak in.
"""

from qpigeon import (
    NoiseModel,
    PAIR_CHECK_ANCILLA_CBITS,
    PIGEON_CBITS,
    all_same_check_circuit,
    export_qasm,
    pair_check_circuit,
    postselect_group,
    sample_shots,
    simulate_ideal,
)

SEED = 42
SHOTS = 8192


def main():
    circuit = pair_check_circuit()
    print("=== pair-check circuit (QASM 2.0) ===")
    print(export_qasm(circuit))

    print("=== ideal distribution ===")
    probs = simulate_ideal(circuit)
    for key, prob in probs.items():
        note = "  <- (+i,+i,+i) pigeons, ancilla flags different boxes" if key.endswith("000") else ""
        print(f"{key}  {prob:.6f}{note}")
    print(f"{len(probs)} outcomes; pattern 00000 (ancilla 'same box') never appears.")

    print()
    print(f"=== {SHOTS} shots, seed {SEED} ===")
    hist = sample_shots(circuit, SHOTS, seed=SEED)
    for key in sorted(hist.counts):
        print(f"{key}  {hist.counts[key]:5d}")
    repeat = sample_shots(circuit, SHOTS, seed=SEED)
    print(f"identical on repeat with the same seed: {repeat.counts == hist.counts}")

    print()
    print("=== grouped by pigeon pattern ===")
    groups = postselect_group(hist, PIGEON_CBITS, PAIR_CHECK_ANCILLA_CBITS)
    for group in groups:
        print(f"pigeons {group.pigeon_pattern}: ancilla {dict(sorted(group.ancilla_counts.items()))}"
              f"  total {group.total}")

    print()
    print("=== 2% readout-flip noise ===")
    noisy = sample_shots(circuit, SHOTS, seed=SEED, noise=NoiseModel(readout_flip_prob=0.02))
    leaked = {k: v for k, v in sorted(noisy.counts.items()) if k not in hist.counts}
    print(f"outcomes outside the ideal support: {len(leaked)}")
    for key, count in leaked.items():
        print(f"{key}  {count:4d}")

    print()
    print("=== all-same-check circuit is flat ===")
    flat = simulate_ideal(all_same_check_circuit())
    print(f"{len(flat)} outcomes, "
          f"min {min(flat.values()):.6f}, max {max(flat.values()):.6f} (1/32 = 0.03125)")


if __name__ == "__main__":
    main()
