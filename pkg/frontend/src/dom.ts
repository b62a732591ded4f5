// Tiny DOM construction helpers, bound to an explicit document so the app
// runs unchanged under jsdom.

export type Child = Node | string | null | undefined;

export function maker(doc: Document) {
  function el<K extends keyof HTMLElementTagNameMap>(
    tag: K,
    attrs: Record<string, string | boolean | ((event: Event) => void)> = {},
    ...children: Child[]
  ): HTMLElementTagNameMap[K] {
    const node = doc.createElement(tag);
    for (const [key, value] of Object.entries(attrs)) {
      if (typeof value === "function") {
        node.addEventListener(key.replace(/^on/, ""), value);
      } else if (typeof value === "boolean") {
        if (value) node.setAttribute(key, "");
      } else {
        node.setAttribute(key, value);
      }
    }
    for (const child of children) {
      if (child == null) continue;
      node.append(typeof child === "string" ? doc.createTextNode(child) : child);
    }
    return node;
  }
  return el;
}

export type El = ReturnType<typeof maker>;
