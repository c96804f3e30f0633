// Control panel: study/process tree, start/stop buttons, and the refinement
// form pre-filled from the current brushes and low-importance drop
// suggestions.

import { buildDraft, dropSuggestions } from "../refine.js";
import type { ImportancePayload, StudyInfo, StudySummary } from "../types.js";
import { DocLike, ElementLike, htmlEl } from "./svg.js";

export interface ControlActions {
  selectStudy(studyId: string): void;
  selectProcess(processId: string): void;
  start(processId: string): void;
  stop(processId: string): void;
  submitRefinement(draft: unknown): void;
}

export function renderStudyTree(
  doc: DocLike,
  studies: readonly StudyInfo[],
  summary: StudySummary | null,
  selected: { study: string | null; processes: string[] },
  actions: ControlActions,
): ElementLike {
  const wrap = htmlEl(doc, "div", { class: "study-tree" });
  for (const study of studies) {
    const isOpen = study.study_id === selected.study;
    const node = htmlEl(doc, "div",
      { class: `study-node${isOpen ? " open" : ""}` });
    const label = htmlEl(doc, "div", { class: "study-label" },
      `${study.study_id} - ${study.name}`);
    if (label.addEventListener) {
      label.addEventListener("click", () => actions.selectStudy(study.study_id));
    }
    node.appendChild(label);
    if (isOpen && summary) {
      for (const p of summary.processes) {
        const row = htmlEl(doc, "div", {
          class: `process-row${selected.processes.includes(p.process_id)
            ? " selected" : ""}`,
          "data-process": p.process_id,
        });
        const plabel = htmlEl(doc, "span", { class: `pstatus-${p.status}` },
          `${p.process_id} [${p.algorithm}] ${p.status}`);
        if (plabel.addEventListener) {
          plabel.addEventListener("click", () => actions.selectProcess(p.process_id));
        }
        row.appendChild(plabel);
        const button = (text: string, cls: string, fn: () => void) => {
          const b = htmlEl(doc, "button", { class: cls }, text);
          if (b.addEventListener) b.addEventListener("click", fn);
          return b;
        };
        if (p.status === "pending") {
          row.appendChild(button("start", "start-btn",
            () => actions.start(p.process_id)));
        }
        if (p.status === "running") {
          row.appendChild(button("stop", "stop-btn",
            () => actions.stop(p.process_id)));
        }
        node.appendChild(row);
      }
    }
    wrap.appendChild(node);
  }
  return wrap;
}

export function renderRefineForm(
  doc: DocLike,
  sourceProcessIds: string[],
  brushes: Record<string, [number, number]>,
  importance: ImportancePayload | null,
  actions: Pick<ControlActions, "submitRefinement">,
): ElementLike {
  const form = htmlEl(doc, "div", { class: "refine-form" });
  form.appendChild(htmlEl(doc, "div", { class: "form-title" }, "refine search space"));
  const entries = Object.entries(brushes);
  if (entries.length === 0) {
    form.appendChild(htmlEl(doc, "div", { class: "form-hint" },
      "brush axes in the search space overview to pre-fill ranges"));
  }
  for (const [name, [lo, hi]] of entries) {
    form.appendChild(htmlEl(doc, "div", {
      class: "refine-range", "data-param": name,
      "data-low": String(lo), "data-high": String(hi),
    }, `${name}: [${lo}, ${hi}]`));
  }
  const drops = importance ? dropSuggestions(importance) : [];
  for (const name of drops) {
    form.appendChild(htmlEl(doc, "div",
      { class: "drop-suggestion", "data-param": name },
      `low importance: consider dropping ${name}`));
  }
  const submit = htmlEl(doc, "button", { class: "refine-submit" },
    "create refined process");
  if (submit.addEventListener) {
    submit.addEventListener("click", () => {
      actions.submitRefinement(buildDraft(sourceProcessIds, brushes));
    });
  }
  form.appendChild(submit);
  return form;
}
