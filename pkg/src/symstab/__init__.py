"""Local-unitary stabilizers and LU classification of symmetric multiqubit states."""
