"""Why pre-assigned values cannot break the pigeonhole principle.

Suppose each same-box projector secretly carried a definite value 0 or 1
before any measurement, as a hidden-variable account would have it.  The
operator identities then force algebraic constraints on those values: the
three pair values minus twice the all-same value must equal 1, and any two
pair values must multiply to the all-same value.  Enumerating all sixteen
candidates shows exactly four survivors, and they are precisely the value
patterns produced by actually placing three pigeons in two boxes.  No
assignment lets every pair disagree, so the paradox cannot be blamed on
pre-existing values.
"""

from qpigeon import (
    CONSTRAINT_NAMES,
    box_placement_values,
    enumerate_assignments,
    pigeonhole_violation_exists,
    valid_assignments,
)


def main():
    print("=== all sixteen candidate assignments ===")
    print("v01 v12 v02 v_all | " + "  ".join(CONSTRAINT_NAMES) + " | valid")
    for cand in enumerate_assignments():
        results = cand.constraint_results()
        flags = "  ".join(f"{'ok' if results[name] else 'NO':<{len(name)}}" for name in CONSTRAINT_NAMES)
        print(f" {cand.v01}   {cand.v12}   {cand.v02}    {cand.v_all}   | {flags} | {cand.valid}")

    print()
    print("=== survivors ===")
    for cand in valid_assignments():
        print(f"{cand}  pair-count value {cand.pair_count_value}")
    print("one assignment has all pigeons together, three have exactly one pair together.")

    print()
    print("=== classical cross-check ===")
    placements = box_placement_values()
    for boxes, values in sorted(placements.items()):
        print(f"boxes {boxes} -> (v01, v12, v02, v_all) = "
              f"({values.v01}, {values.v12}, {values.v02}, {values.v_all})")
    image = set(placements.values())
    print(f"placement image equals the valid set: {image == set(valid_assignments())}")

    print()
    print("=== the would-be paradox ===")
    print(f"assignment with every pair in different boxes exists: {pigeonhole_violation_exists()}")
    print("dropping the counting constraint admits the all-zero assignment:")
    print(f"  violation possible without it: {pigeonhole_violation_exists(require_counting=False)}")


if __name__ == "__main__":
    main()
