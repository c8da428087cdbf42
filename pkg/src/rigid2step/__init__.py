"""Rigidity of graded 2-step nilpotent Lie algebras, Clifford modules and the J^2-condition.

Exact rational arithmetic throughout. Submodules: ``linalg``, ``poly``,
``lie``, ``clifford``, ``rigidity``, ``jsquared``, ``catalog``,
``serialize`` and ``cli``.
"""

__version__ = "0.1.0"
