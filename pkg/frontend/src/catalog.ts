// Built-in starting instances, smallest first.

import type { InstanceDoc } from "./types.js";

export interface CatalogEntry {
  label: string;
  instance: InstanceDoc;
}

export const CATALOG: CatalogEntry[] = [
  {
    label: "smallest instance (group I)",
    instance: { vertices: ["S", "A", "B"], edges: [["A", "B"], ["S", "A", "B"]] },
  },
  {
    label: "4-ring with two lobes (group V)",
    instance: {
      vertices: ["S", "A", "B", "C", "D"],
      edges: [["A", "B", "C", "D"], ["S", "A", "B"], ["S", "B", "C"]],
    },
  },
  {
    label: "6-ring with three lobes (group V)",
    instance: {
      vertices: ["S", "A", "B", "C", "D", "E", "F"],
      edges: [
        ["A", "B", "C", "D", "E", "F"],
        ["S", "A", "B"], ["S", "B", "C"], ["S", "C", "D"],
      ],
    },
  },
  {
    label: "8-ring with four lobes (group I)",
    instance: {
      vertices: ["S", "A", "B", "C", "D", "E", "F", "G", "H"],
      edges: [
        ["A", "B", "C", "D", "E", "F", "G", "H"],
        ["S", "A", "B"], ["S", "C", "D"], ["S", "E", "F"], ["S", "G", "H"],
      ],
    },
  },
  {
    label: "4-cycle of lobes (group II)",
    instance: {
      vertices: ["S", "A", "B", "C", "D"],
      edges: [
        ["A", "B", "C", "D"],
        ["S", "A", "B"], ["S", "B", "C"], ["S", "C", "D"], ["S", "D", "A"],
      ],
    },
  },
  {
    label: "outside the taxonomy (BC shape)",
    instance: {
      vertices: ["S", "A", "B", "C", "D", "E", "F"],
      edges: [
        ["A", "B", "C", "D", "E", "F"],
        ["S", "A", "B"], ["S", "B", "C"], ["S", "C", "D"], ["S", "D", "A"],
      ],
    },
  },
];
