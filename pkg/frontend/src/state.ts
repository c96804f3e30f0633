// Single view-state store: selections, brushes, color domain. All view
// updates flow through here so coordinated views stay in sync.

import type { ParamAxis } from "./types.js";

export interface ColorDomain {
  min: number;
  max: number;
}

export class ViewState {
  selectedStudy: string | null = null;
  selectedProcesses: string[] = [];
  colorDomain: ColorDomain = { min: 0, max: 1 };
  brushes: Record<string, [number, number]> = {};
  selectedExperiments: { trial_id: number; process_id: string }[] = [];
  activeImportanceSubset: readonly string[] | null = null;
  private axes: readonly ParamAxis[] = [];
  private listeners: (() => void)[] = [];

  onChange(fn: () => void): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  setAxes(axes: readonly ParamAxis[]): void {
    this.axes = axes;
    for (const name of Object.keys(this.brushes)) {
      if (!axes.some((a) => a.name === name)) delete this.brushes[name];
    }
    this.emit();
  }

  setColorDomain(min: number, max: number): void {
    if (!(min < max)) throw new Error("color domain needs min < max");
    this.colorDomain = { min, max };
    this.emit();
  }

  setBrush(name: string, lo: number, hi: number): void {
    if (!this.axes.some((a) => a.name === name)) {
      throw new Error(`brush on unknown axis ${name}`);
    }
    this.brushes[name] = lo <= hi ? [lo, hi] : [hi, lo];
    this.emit();
  }

  clearBrush(name: string): void {
    delete this.brushes[name];
    this.emit();
  }

  selectStudy(studyId: string): void {
    this.selectedStudy = studyId;
    this.selectedProcesses = [];
    this.brushes = {};
    this.selectedExperiments = [];
    this.emit();
  }

  selectProcess(processId: string, additive = false): void {
    if (additive) {
      if (!this.selectedProcesses.includes(processId)) {
        this.selectedProcesses.push(processId);
      }
    } else {
      this.selectedProcesses = [processId];
    }
    this.emit();
  }

  toggleExperiment(trial: { trial_id: number; process_id: string }): void {
    const i = this.selectedExperiments.findIndex(
      (t) => t.trial_id === trial.trial_id && t.process_id === trial.process_id);
    if (i >= 0) this.selectedExperiments.splice(i, 1);
    else this.selectedExperiments.push(trial);
    this.emit();
  }

  setImportanceSubset(subset: readonly string[] | null): void {
    this.activeImportanceSubset = subset;
    this.emit();
  }
}
