// Minimal view tree: plain objects plus a DOM mounter. Tests walk the tree
// and invoke handlers directly, so game flows run without a DOM.

export interface VNode {
  tag: string;
  attrs: Record<string, string>;
  on: Record<string, (event?: unknown) => void>;
  children: (VNode | string)[];
}

export function h(
  tag: string,
  attrs: Record<string, string> = {},
  children: (VNode | string)[] = [],
  on: Record<string, (event?: unknown) => void> = {},
): VNode {
  return { tag, attrs, on, children };
}

const SVG_NS = "http://www.w3.org/2000/svg";
const SVG_TAGS = new Set(["svg", "path", "circle", "g", "text", "line", "title"]);

export function mount(node: VNode | string, doc: Document): Node {
  if (typeof node === "string") return doc.createTextNode(node);
  const el = SVG_TAGS.has(node.tag)
    ? doc.createElementNS(SVG_NS, node.tag)
    : doc.createElement(node.tag);
  for (const [key, value] of Object.entries(node.attrs)) {
    el.setAttribute(key, value);
  }
  for (const [event, handler] of Object.entries(node.on)) {
    el.addEventListener(event, handler);
  }
  for (const child of node.children) {
    el.appendChild(mount(child, doc));
  }
  return el;
}

export function findAll(
  node: VNode | string,
  pred: (node: VNode) => boolean,
  out: VNode[] = [],
): VNode[] {
  if (typeof node === "string") return out;
  if (pred(node)) out.push(node);
  for (const child of node.children) findAll(child, pred, out);
  return out;
}

export function findByClass(node: VNode, cls: string): VNode[] {
  return findAll(node, (n) => (n.attrs.class ?? "").split(" ").includes(cls));
}

export function textOf(node: VNode | string): string {
  if (typeof node === "string") return node;
  return node.children.map(textOf).join("");
}
