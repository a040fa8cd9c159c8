"""Classical invariants of Legendrian torus links and cable links.

Submodules: ``farey`` (slopes), ``mountain`` (mountain ranges),
``toruslinks``, ``cables``, ``fronts`` (front diagrams) and ``cli``.
"""

__version__ = "0.1.0"
