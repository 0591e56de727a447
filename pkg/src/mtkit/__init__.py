"""Transfer-based translation between small unification grammars.

Modules: ``terms`` (terms and unification), ``lingdata`` (resource
loading), ``chart`` (parser), ``generator``, ``transfer``, ``composer``
(rule-set composition), ``porter`` (lexicon porting), ``evalkit``
(coverage and judgment tables) and ``cli``.
"""

__version__ = "0.1.0"
