/** Client-side elicitation session.
 *
 * Wraps the API client with the state the UI binds to: the latest
 * committed snapshot, the CR history (one point per committed entry,
 * for the sparkline), and an optional what-if preview.  Mutations are
 * serialized: at most one request is in flight, later interactions
 * queue behind it.
 */

import { ApiClient, Snapshot } from "./api.js";

export type SessionListener = (session: ElicitationSession) => void;

export interface CrPoint {
  /** 1-based index of the committed judgment. */
  entry: number;
  /** CR after that judgment, or null when undefined (disconnected or
   * no random index for this size). */
  cr: number | null;
}

export class ElicitationSession {
  private sid = "";
  private committed: Snapshot | null = null;
  private previewSnapshot: Snapshot | null = null;
  private previewCell: { i: number; j: number; value: number | null } | null =
    null;
  private crPoints: CrPoint[] = [];
  private entryCount = 0;
  private queue: Promise<unknown> = Promise.resolve();
  private listeners: SessionListener[] = [];

  constructor(private readonly api: ApiClient) {}

  get id(): string {
    return this.sid;
  }

  get snapshot(): Snapshot | null {
    return this.committed;
  }

  get preview(): Snapshot | null {
    return this.previewSnapshot;
  }

  get previewedCell(): { i: number; j: number; value: number | null } | null {
    return this.previewCell;
  }

  get crHistory(): readonly CrPoint[] {
    return this.crPoints;
  }

  /** Known value of an above-diagonal cell, from the snapshot text. */
  cellValue(i: number, j: number): number | null {
    if (!this.committed) return null;
    const rows = this.committed.matrix.trim().split("\n");
    const token = rows[i]?.trim().split(/\s+/)[j];
    if (token === undefined || token === "*") return null;
    if (token.includes("/")) {
      const [num, den] = token.split("/");
      return Number(num) / Number(den);
    }
    return Number(token);
  }

  subscribe(listener: SessionListener): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener(this);
  }

  /** Runs `task` after all previously queued mutations settle. */
  private enqueue<T>(task: () => Promise<T>): Promise<T> {
    const next = this.queue.then(task, task);
    this.queue = next.catch(() => undefined);
    return next;
  }

  start(n: number): Promise<void> {
    return this.enqueue(async () => {
      const created = await this.api.createSession(n);
      this.sid = created.session_id;
      this.committed = created.snapshot;
      this.previewSnapshot = null;
      this.previewCell = null;
      this.crPoints = [];
      this.entryCount = 0;
      this.notify();
    });
  }

  /** Resume an existing session (e.g. after reload with a stored id). */
  resume(sid: string): Promise<void> {
    return this.enqueue(async () => {
      const info = await this.api.getSession(sid);
      this.sid = sid;
      this.committed = info.snapshot;
      this.entryCount = info.history.length;
      this.notify();
    });
  }

  commit(i: number, j: number, value: number | null): Promise<Snapshot> {
    return this.enqueue(async () => {
      const snapshot = await this.api.setEntry(this.sid, i, j, value);
      this.committed = snapshot;
      this.previewSnapshot = null;
      this.previewCell = null;
      this.entryCount += 1;
      this.crPoints.push({
        entry: this.entryCount,
        cr: snapshot.cr ?? null,
      });
      this.notify();
      return snapshot;
    });
  }

  previewEntry(
    i: number,
    j: number,
    value: number | null,
  ): Promise<Snapshot> {
    return this.enqueue(async () => {
      const snapshot = await this.api.whatIf(this.sid, i, j, value);
      this.previewSnapshot = snapshot;
      this.previewCell = { i, j, value };
      this.notify();
      return snapshot;
    });
  }

  /** Commits the previewed judgment, if any. */
  commitPreview(): Promise<Snapshot | null> {
    const cell = this.previewCell;
    if (!cell) return Promise.resolve(null);
    return this.commit(cell.i, cell.j, cell.value);
  }

  discardPreview(): void {
    this.previewSnapshot = null;
    this.previewCell = null;
    this.notify();
  }

  exportMatrix(): Promise<string> {
    return this.enqueue(async () => {
      const out = await this.api.exportMatrix(this.sid);
      return out.matrix;
    });
  }
}
