// Shapes served by the coocnet HTTP API. Field names mirror the JSON exactly.

export interface Suggestion {
  concept_id: string;
  display: string;
  distance: number;
}

export type NodeKind = "root" | "category" | "leaf";

export type LeafColor = "orange" | "green" | "yellow";

export interface TreeNodePayload {
  kind: NodeKind;
  label: string;
  id: string | null;
  weight: number;
  // categories carry true/false; root and leaves serialize null
  collapsed: boolean | null;
  color: LeafColor | null;
  children: TreeNodePayload[];
}

export type GraphMode = "hierarchical" | "flat";

export interface GraphPayload {
  query_id: string;
  mode: GraphMode;
  semantic_type: string | null;
  leaf_count: number;
  tree: TreeNodePayload;
}

export interface PublicationItem {
  doc_id: string;
  title: string;
  year: number;
  url: string;
  source_kind: "research" | "encyclopedia";
}

export interface PublicationsPayload {
  total: number;
  items: PublicationItem[];
  decade_histogram: Record<string, number>;
}

export interface HealthPayload {
  status: string;
  format_version: number;
  build_stats: Record<string, number>;
}

export interface FeedbackBody {
  text: string;
  context_url?: string;
}
