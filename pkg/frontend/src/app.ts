// Controller: every state change round-trips through the service; the
// client renders payloads and never computes game values itself.

import { ApiClient, ServiceError } from "./api.js";
import { buildBoard, buildHistory } from "./board.js";
import type { AnalysisView, SessionView } from "./types.js";
import { h, VNode } from "./view.js";

export interface AppState {
  session: SessionView | null;
  analysis: AnalysisView | null;
  error: string | null;
  busy: boolean;
}

export class App {
  api: ApiClient;
  state: AppState = { session: null, analysis: null, error: null, busy: false };
  onRender: (tree: VNode) => void;

  constructor(api: ApiClient, onRender: (tree: VNode) => void = () => {}) {
    this.api = api;
    this.onRender = onRender;
  }

  private render(): VNode {
    const tree = this.view();
    this.onRender(tree);
    return tree;
  }

  view(): VNode {
    const parts: VNode[] = [];
    if (this.state.error) {
      parts.push(h("div", { class: "error-banner" }, [this.state.error]));
    }
    if (this.state.session) {
      parts.push(
        buildBoard(this.state.session, this.state.analysis, {
          onSelect: (index) => void this.clickSlice(index),
        }),
      );
      parts.push(buildHistory(this.state.session));
    }
    return h("main", { class: "app" }, parts);
  }

  async startGame(req: {
    cutting?: string;
    family?: string;
    params?: Record<string, string>;
    engine: string;
    human_side: "alice" | "bob";
  }): Promise<VNode> {
    this.state.error = null;
    try {
      this.state.session = await this.api.createGame(req);
      await this.refreshAnalysis();
    } catch (err) {
      this.state.error = describe(err);
    }
    return this.render();
  }

  async clickSlice(index: number): Promise<VNode> {
    const session = this.state.session;
    if (!session || this.state.busy) return this.render();
    if (
      session.status !== "awaiting-human" ||
      !session.position.legal_moves.includes(index)
    ) {
      return this.render(); // clicks on non-legal wedges are inert
    }
    this.state.busy = true;
    try {
      this.state.session = await this.api.submitMove(session.id, index);
      this.state.error = null;
      await this.refreshAnalysis();
    } catch (err) {
      this.state.error = describe(err);
    } finally {
      this.state.busy = false;
    }
    return this.render();
  }

  private async refreshAnalysis(): Promise<void> {
    const session = this.state.session;
    if (!session || session.status === "finished") {
      this.state.analysis = null;
      return;
    }
    try {
      this.state.analysis = await this.api.getAnalysis(session.id);
    } catch {
      this.state.analysis = null; // overlays are optional
    }
  }
}

function describe(err: unknown): string {
  if (err instanceof ServiceError) {
    const detail = err.detail;
    if (detail && typeof detail === "object" && "message" in detail) {
      const msg = (detail as { message: string }).message;
      const legal = (detail as { legal_moves?: number[] }).legal_moves;
      return legal ? `${msg}; legal: ${legal.join(", ")}` : msg;
    }
    return String(detail);
  }
  return err instanceof Error ? err.message : String(err);
}
