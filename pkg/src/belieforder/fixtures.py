"""Bundled example models."""

from .model import ModelFile, load_model

# Six atoms where ordering on equal likelihoods breaks transitivity:
# S >= T and T >= U are asserted with weak ties, but S >= U is not.
SIX_ATOMS = """\
atoms: i j k l m n
pi: 2/5
evidence e1: i=3/5 j=2/5 k=1/2 l=3/5 m=2/5 n=1/2
sentence S: i or j or m
sentence T: k or l or m
sentence U: i or n or k
"""


def six_atoms() -> ModelFile:
    return load_model(SIX_ATOMS)
