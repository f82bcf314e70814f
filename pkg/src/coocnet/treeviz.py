"""Query-result view model: hierarchical grouping, excision, flat mode.

Neighbors group under chains of category nodes derived from the proper
prefixes of each concept's grouping tree number (its lexicographically
smallest one). Single-child categories are excised to fixpoint before the
tree is weighted, collapsed, and ordered.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ontology import Dictionary, category_name
from .query import NeighborEntry

KIND_ROOT = "root"
KIND_CATEGORY = "category"
KIND_LEAF = "leaf"

UNCLASSIFIED_LABEL = "Unclassified"


@dataclass
class TreeNode:
    """One node of the result tree.

    concept_id is set on root and leaf nodes, collapsed only on categories,
    color only on leaves. score and path are build-time ordering aids and are
    not serialized.
    """

    kind: str
    label: str
    children: list["TreeNode"] = field(default_factory=list)
    weight: int = 0
    concept_id: str | None = None
    collapsed: bool | None = None
    color: str | None = None
    score: float | None = None
    path: str | None = None


def leaf_weight(entry: NeighborEntry) -> int:
    return entry.research_count + (1 if entry.encyclopedia_hit else 0)


def _make_leaf(entry: NeighborEntry, dictionary: Dictionary) -> TreeNode:
    concept = dictionary.get(entry.concept_id)
    return TreeNode(
        kind=KIND_LEAF,
        label=concept.preferred_term,
        weight=leaf_weight(entry),
        concept_id=concept.id,
        color=entry.source_color,
        score=entry.score,
    )


def _make_root(query_id: str, dictionary: Dictionary) -> TreeNode:
    concept = dictionary.get(query_id)
    return TreeNode(kind=KIND_ROOT, label=concept.preferred_term, concept_id=concept.id)


def _proper_prefixes(tree_number: str) -> list[str]:
    parts = tree_number.split(".")
    return [".".join(parts[:i]) for i in range(1, len(parts))]


def build_hierarchy(query_id: str, entries: list[NeighborEntry],
                    dictionary: Dictionary) -> TreeNode:
    """Group neighbors into category chains, excise, collapse, weigh, order."""
    root = _make_root(query_id, dictionary)
    categories: dict[str, TreeNode] = {}

    def category_for(path: str, parent: TreeNode, label: str) -> TreeNode:
        node = categories.get(path)
        if node is None:
            node = TreeNode(kind=KIND_CATEGORY, label=label, collapsed=False, path=path)
            categories[path] = node
            parent.children.append(node)
        return node

    for entry in entries:
        leaf = _make_leaf(entry, dictionary)
        concept = dictionary.get(entry.concept_id)
        parent = root
        if concept.tree_numbers:
            for prefix in _proper_prefixes(min(concept.tree_numbers)):
                parent = category_for(prefix, parent, category_name(dictionary, prefix))
        else:
            parent = category_for("\x00unclassified", root, UNCLASSIFIED_LABEL)
        parent.children.append(leaf)

    root = excise_single_children(root)
    _set_collapsed(root)
    _compute_weights(root)
    _sort_children(root)
    return root


def excise_single_children(root: TreeNode) -> TreeNode:
    """Replace every single-child category by its child, to fixpoint.

    Excision swaps a node for its only child, so child counts never change;
    one bottom-up pass therefore reaches the fixpoint. The root survives even
    with one child. The input tree is not modified.
    """

    def rebuild(node: TreeNode) -> TreeNode:
        children = []
        for child in node.children:
            child = rebuild(child)
            if child.kind == KIND_CATEGORY and len(child.children) == 1:
                child = child.children[0]
            children.append(child)
        return TreeNode(
            kind=node.kind,
            label=node.label,
            children=children,
            weight=node.weight,
            concept_id=node.concept_id,
            collapsed=node.collapsed,
            color=node.color,
            score=node.score,
            path=node.path,
        )

    return rebuild(root)


def flat_view(query_id: str, entries: list[NeighborEntry],
              dictionary: Dictionary) -> TreeNode:
    """Root with every neighbor as a direct leaf child, no categories."""
    root = _make_root(query_id, dictionary)
    root.children = [
        _make_leaf(entry, dictionary)
        for entry in sorted(entries, key=lambda e: (-e.score, e.concept_id))
    ]
    _compute_weights(root)
    return root


def _set_collapsed(root: TreeNode) -> None:
    # Every category sits at depth >= 1, so all of them start collapsed.
    for node in iter_nodes(root):
        if node.kind == KIND_CATEGORY:
            node.collapsed = True


def _compute_weights(root: TreeNode) -> int:
    def visit(node: TreeNode) -> int:
        if node.kind == KIND_LEAF:
            return node.weight
        node.weight = sum(visit(child) for child in node.children)
        return node.weight
    return visit(root)


def _sort_children(node: TreeNode) -> None:
    def key(child: TreeNode):
        if child.kind == KIND_CATEGORY:
            return (0, (child.label, child.path or ""))
        return (1, (-(child.score or 0), child.concept_id or ""))
    node.children.sort(key=key)
    for child in node.children:
        _sort_children(child)


def iter_nodes(root: TreeNode):
    yield root
    for child in root.children:
        yield from iter_nodes(child)


def leaf_count(root: TreeNode) -> int:
    return sum(1 for node in iter_nodes(root) if node.kind == KIND_LEAF)


def serialize_node(node: TreeNode) -> dict:
    """JSON view-model shape with a fixed key order."""
    return {
        "kind": node.kind,
        "label": node.label,
        "id": node.concept_id,
        "weight": node.weight,
        "collapsed": node.collapsed,
        "color": node.color,
        "children": [serialize_node(child) for child in node.children],
    }
