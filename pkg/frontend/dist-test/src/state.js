// Single view-state store: selections, brushes, color domain. All view
// updates flow through here so coordinated views stay in sync.
export class ViewState {
    constructor() {
        this.selectedStudy = null;
        this.selectedProcesses = [];
        this.colorDomain = { min: 0, max: 1 };
        this.brushes = {};
        this.selectedExperiments = [];
        this.activeImportanceSubset = null;
        this.axes = [];
        this.listeners = [];
    }
    onChange(fn) {
        this.listeners.push(fn);
    }
    emit() {
        for (const fn of this.listeners)
            fn();
    }
    setAxes(axes) {
        this.axes = axes;
        for (const name of Object.keys(this.brushes)) {
            if (!axes.some((a) => a.name === name))
                delete this.brushes[name];
        }
        this.emit();
    }
    setColorDomain(min, max) {
        if (!(min < max))
            throw new Error("color domain needs min < max");
        this.colorDomain = { min, max };
        this.emit();
    }
    setBrush(name, lo, hi) {
        if (!this.axes.some((a) => a.name === name)) {
            throw new Error(`brush on unknown axis ${name}`);
        }
        this.brushes[name] = lo <= hi ? [lo, hi] : [hi, lo];
        this.emit();
    }
    clearBrush(name) {
        delete this.brushes[name];
        this.emit();
    }
    selectStudy(studyId) {
        this.selectedStudy = studyId;
        this.selectedProcesses = [];
        this.brushes = {};
        this.selectedExperiments = [];
        this.emit();
    }
    selectProcess(processId, additive = false) {
        if (additive) {
            if (!this.selectedProcesses.includes(processId)) {
                this.selectedProcesses.push(processId);
            }
        }
        else {
            this.selectedProcesses = [processId];
        }
        this.emit();
    }
    toggleExperiment(trial) {
        const i = this.selectedExperiments.findIndex((t) => t.trial_id === trial.trial_id && t.process_id === trial.process_id);
        if (i >= 0)
            this.selectedExperiments.splice(i, 1);
        else
            this.selectedExperiments.push(trial);
        this.emit();
    }
    setImportanceSubset(subset) {
        this.activeImportanceSubset = subset;
        this.emit();
    }
}
