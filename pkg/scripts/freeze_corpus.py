"""
Regenerate the frozen link diagrams from the bundled published PD codes.

Usage::

    python scripts/freeze_corpus.py [output_dir]

Without an argument the files are written next to ``pd_codes.txt`` in the
package data, overwriting the committed copies.
"""

import argparse
import logging

from importlib import resources

from torchquandle.diagram import freeze_corpus


def main():
    default = resources.files("torchquandle.data").joinpath("links")
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("output_dir", nargs="?", default=str(default))
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    for path in freeze_corpus(args.output_dir):
        print(path)


if __name__ == "__main__":
    main()
