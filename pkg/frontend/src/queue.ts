/**
 * Single-threaded event queue. Every state mutation in the app goes
 * through one of these, so mutations are applied strictly in arrival
 * order even when handlers enqueue follow-up work mid-drain.
 */

export type Mutation = () => void;

export class EventQueue {
  private items: Mutation[] = [];
  private draining = false;

  push(fn: Mutation): void {
    this.items.push(fn);
  }

  get pending(): number {
    return this.items.length;
  }

  /**
   * Run queued mutations in FIFO order until the queue is empty.
   * Mutations pushed while draining run in the same pass. A nested
   * flush call is a no-op; the outer drain already owns the queue.
   * Returns the number of mutations run.
   */
  flush(): number {
    if (this.draining) {
      return 0;
    }
    this.draining = true;
    let ran = 0;
    try {
      while (this.items.length > 0) {
        const fn = this.items.shift()!;
        fn();
        ran++;
      }
    } finally {
      this.draining = false;
    }
    return ran;
  }
}
