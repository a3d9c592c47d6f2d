"""Aritmetica esatta per numeri di Bernoulli, somme di potenze e valori di zeta.

Il pacchetto è diviso in moduli piatti, dal più elementare al più composto:
``exact_core`` (razionali, polinomi, serie), ``bernoulli``, ``fourier``,
``zeta``, poi ``verify`` per i controlli incrociati e ``parsing``/``reporting``
per le forme testuali. La riga di comando è in ``app.cli``.
"""

__all__ = [
    "exact_core",
    "bernoulli",
    "fourier",
    "zeta",
    "verify",
    "parsing",
    "reporting",
]
