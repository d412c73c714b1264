/** Snapshot undo/redo over serialized documents: restoring pops the exact
 * prior text, so no drift can accumulate across edits. */
export class UndoStack {
  private undoStack: string[] = [];
  private redoStack: string[] = [];

  constructor(private maxSize = 200) {}

  push(snapshot: string): void {
    this.undoStack.push(snapshot);
    if (this.undoStack.length > this.maxSize) {
      this.undoStack.shift();
    }
    this.redoStack.length = 0;
  }

  undo(current: string): string | null {
    const snapshot = this.undoStack.pop();
    if (snapshot === undefined) return null;
    this.redoStack.push(current);
    return snapshot;
  }

  redo(current: string): string | null {
    const snapshot = this.redoStack.pop();
    if (snapshot === undefined) return null;
    this.undoStack.push(current);
    return snapshot;
  }

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  get canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  clear(): void {
    this.undoStack.length = 0;
    this.redoStack.length = 0;
  }
}
