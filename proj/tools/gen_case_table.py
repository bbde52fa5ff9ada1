#!/usr/bin/env python3
"""Generate the bijective simple case-mapping table used by core/src/unicode.cpp.

Only pairs (upper, lower) where upper.lower() == lower and lower.upper() == upper,
both single scalars, are kept. Everything else is caseless.
"""
import sys
import unicodedata


def main() -> None:
    pairs = []
    for cp in range(0x110000):
        c = chr(cp)
        low = c.lower()
        if low == c or len(low) != 1:
            continue
        up = low.upper()
        if up != c:
            continue
        pairs.append((cp, ord(low)))
    out = sys.stdout
    out.write("// Generated by tools/gen_case_table.py from Unicode %s. Do not edit.\n"
              % unicodedata.unidata_version)
    out.write("// {upper, lower} pairs, sorted by upper.\n")
    for up, low in pairs:
        out.write("{0x%04X, 0x%04X},\n" % (up, low))


if __name__ == "__main__":
    main()
