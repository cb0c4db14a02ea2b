from __future__ import annotations

from typing import Any

from docutils import nodes
from sphinx.application import Sphinx
from sphinx.util.docutils import SphinxDirective


class exception_hierarchy(nodes.General, nodes.Element):
    """A nested bullet list of exceptions, rendered inside its own block."""


def visit_exception_hierarchy(self: Any, node: exception_hierarchy) -> None:
    self.body.append(self.starttag(node, "div", CLASS="exception-hierarchy-content"))


def depart_exception_hierarchy(self: Any, node: exception_hierarchy) -> None:
    self.body.append("</div>\n")


def skip_node(self: Any, node: exception_hierarchy) -> None:
    raise nodes.SkipNode


class ExceptionHierarchy(SphinxDirective):
    has_content = True

    def run(self) -> list[nodes.Node]:
        self.assert_has_content()
        node = exception_hierarchy("\n".join(self.content))
        self.state.nested_parse(self.content, self.content_offset, node)
        return [node]


def setup(app: Sphinx) -> dict[str, Any]:
    app.add_node(
        exception_hierarchy,
        html=(visit_exception_hierarchy, depart_exception_hierarchy),
        latex=(skip_node, None),
        text=(skip_node, None),
    )
    app.add_directive("exception_hierarchy", ExceptionHierarchy)
    return {"parallel_read_safe": True}
